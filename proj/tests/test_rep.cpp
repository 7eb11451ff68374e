#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "equistab/errors.hpp"
#include "equistab/named_groups.hpp"
#include "equistab/rep.hpp"
#include "oracles.hpp"

using namespace equistab;

namespace {

PermGroup make_group(const std::string& name) {
  GroupSpec s = parse_group_name(name);
  return PermGroup::enumerate(s.degree, s.generators);
}

struct Ctx {
  PermGroup group;
  SubgroupLattice lattice;
  explicit Ctx(const std::string& name)
      : group(make_group(name)), lattice(build_lattice(group)) {}
  Ctx(const Ctx&) = delete;
};

std::set<int> iso_set(const Representation& v, const SubgroupLattice& lat) {
  auto idx = isotropy_of_sphere(v, lat);
  return {idx.begin(), idx.end()};
}

}  // namespace

TEST_CASE("natural permutation rep of S3") {
  Ctx s3("S3");
  Representation v = Representation::build(s3.group, RepSpec::permutation(3));
  CHECK(v.dim() == 3);
  CHECK(v.character(0) == doctest::Approx(3.0));
  int transposition = s3.group.index_of(Perm{1, 0, 2});
  int threecycle = s3.group.index_of(Perm{1, 2, 0});
  CHECK(v.character(transposition) == doctest::Approx(1.0));
  CHECK(v.character(threecycle) == doctest::Approx(0.0));
}

TEST_CASE("sign rep validity follows the group") {
  Ctx c2("C2");
  CHECK(Representation::build(c2.group, RepSpec::sign()).dim() == 1);

  // adjacent-transposition generators make sign valid for S3
  Ctx s3("S3");
  Representation sgn = Representation::build(s3.group, RepSpec::sign());
  int threecycle = s3.group.index_of(Perm{1, 2, 0});
  CHECK(sgn.character(threecycle) == doctest::Approx(1.0));

  // no real sign character on C3: the extension is inconsistent
  Ctx c3("C3");
  CHECK_THROWS_AS(
      (void)Representation::build(c3.group, RepSpec::sign()), ParseError);
}

TEST_CASE("rotation rep of C4") {
  Ctx c4("C4");
  Representation v = Representation::build(c4.group, RepSpec::rotation(4, 1));
  CHECK(v.dim() == 2);
  int gen = c4.group.index_of(Perm{1, 2, 3, 0});
  CHECK(v.character(gen) == doctest::Approx(0.0).epsilon(1e-12));
  Representation w = Representation::build(c4.group, RepSpec::rotation(4, 2));
  CHECK(w.character(gen) == doctest::Approx(-2.0));

  Ctx s3("S3");
  CHECK_THROWS_AS(
      (void)Representation::build(s3.group, RepSpec::rotation(6, 1)),
      ParseError);
}

TEST_CASE("explicit matrices are validated") {
  Ctx c2("C2");
  Eigen::MatrixXd bad(2, 2);
  bad << 1, 1, 0, 1;  // not orthogonal
  CHECK_THROWS_WITH_AS(
      (void)Representation::build(c2.group, RepSpec::matrices({bad})),
      doctest::Contains("orthogonal"), ParseError);

  Eigen::MatrixXd rot90(2, 2);
  rot90 << 0, -1, 1, 0;  // order 4, cannot represent C2
  CHECK_THROWS_WITH_AS(
      (void)Representation::build(c2.group, RepSpec::matrices({rot90})),
      doctest::Contains("homomorphism"), ParseError);

  Eigen::MatrixXd flip(2, 2);
  flip << 0, 1, 1, 0;
  Representation ok = Representation::build(c2.group, RepSpec::matrices({flip}));
  CHECK(ok.dim() == 2);
  CHECK(ok.character(1) == doctest::Approx(0.0));
}

TEST_CASE("fixed dims") {
  Ctx s3("S3");
  Representation nat = Representation::build(s3.group, RepSpec::permutation(3));
  int t = s3.group.index_of(Perm{1, 0, 2});
  Subgroup h = make_subgroup(s3.group, close_subset(s3.group, {t}));
  CHECK(fixed_dim(nat, h) == 2);
  CHECK(fixed_dim(nat, trivial_subgroup(s3.group)) == 3);

  Representation reg = Representation::build(s3.group, RepSpec::regular());
  for (const Subgroup& sub : s3.lattice.subgroups)
    CHECK(fixed_dim(reg, sub) == s3.group.order() / sub.order);
}

TEST_CASE("fixed dims match orbit counting for permutation reps") {
  for (const char* name : {"C2", "C4", "S3", "D4", "Q8", "A4", "S4"}) {
    CAPTURE(name);
    Ctx ctx(name);
    Representation nat =
        Representation::build(ctx.group, RepSpec::permutation(ctx.group.degree()));
    for (const Subgroup& h : ctx.lattice.subgroups)
      CHECK(fixed_dim(nat, h) ==
            oracle::orbit_count(ctx.group, h.members.indices(),
                                ctx.group.degree()));
  }
}

TEST_CASE("fixed-dim table properties") {
  for (const char* name : {"S3", "D4", "Q8", "C4"}) {
    CAPTURE(name);
    Ctx ctx(name);
    std::vector<Representation> reps;
    reps.push_back(Representation::build(ctx.group, RepSpec::standard()));
    reps.push_back(Representation::build(ctx.group, RepSpec::regular()));
    reps.push_back(
        Representation::build(ctx.group, RepSpec::permutation(ctx.group.degree())));
    for (const Representation& v : reps) {
      FixedDimTable t = fixed_dim_table(v, ctx.lattice);
      // monotone non-increasing along inclusion
      for (int i = 0; i < ctx.lattice.num_subgroups(); ++i)
        for (int j = 0; j < ctx.lattice.num_subgroups(); ++j)
          if (ctx.lattice.subgroups[j].members.contains(
                  ctx.lattice.subgroups[i].members))
            CHECK(t.at(i) >= t.at(j));
      // conjugation-invariant
      for (const auto& cls : ctx.lattice.classes)
        for (int m : cls.member_indices)
          CHECK(t.at(m) ==
                t.at(ctx.lattice.index_of(cls.representative.members)));
      CHECK(t.at(0) == v.dim());
    }
    // additivity under direct sums
    FixedDimTable a = fixed_dim_table(reps[0], ctx.lattice);
    FixedDimTable b = fixed_dim_table(reps[1], ctx.lattice);
    FixedDimTable ab =
        fixed_dim_table(Representation::direct_sum(reps[0], reps[1]), ctx.lattice);
    for (int i = 0; i < ctx.lattice.num_subgroups(); ++i)
      CHECK(ab.at(i) == a.at(i) + b.at(i));
  }
}

TEST_CASE("averaging projector is idempotent") {
  Ctx d4("D4");
  Representation v = Representation::build(d4.group, RepSpec::standard());
  for (const Subgroup& h : d4.lattice.subgroups) {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(v.dim(), v.dim());
    for (int x : h.members.indices()) p += v.matrix(x);
    p /= h.order;
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("sphere dims") {
  Ctx s3("S3");
  Representation std2 = Representation::build(s3.group, RepSpec::standard());
  int t = s3.group.index_of(Perm{1, 0, 2});
  Subgroup c2 = make_subgroup(s3.group, close_subset(s3.group, {t}));
  int rot = s3.group.index_of(Perm{1, 2, 0});
  Subgroup a3 = make_subgroup(s3.group, close_subset(s3.group, {rot}));
  CHECK(sphere_dim(std2, c2) == 0);
  CHECK(sphere_dim(std2, a3) == -1);

  Representation triv = Representation::build(s3.group, RepSpec::trivial(1));
  CHECK(sphere_dim(triv, full_subgroup(s3.group)) == 0);
}

TEST_CASE("sphere isotropy") {
  Ctx s3("S3");
  Representation std2 = Representation::build(s3.group, RepSpec::standard());
  std::set<int> expect;
  for (int i = 0; i < s3.lattice.num_subgroups(); ++i)
    if (s3.lattice.subgroups[i].order <= 2) expect.insert(i);
  CHECK(iso_set(std2, s3.lattice) == expect);  // trivial + three C2

  Representation reg = Representation::build(s3.group, RepSpec::regular());
  CHECK(iso_set(reg, s3.lattice).size() == 6);  // everything

  Ctx c2("C2");
  Representation sgn = Representation::build(c2.group, RepSpec::sign());
  CHECK(iso_set(sgn, c2.lattice) == std::set<int>{0});

  // isotropy sets are conjugation closed
  for (const char* name : {"S3", "D4", "S4"}) {
    Ctx ctx(name);
    Representation v = Representation::build(ctx.group, RepSpec::standard());
    std::set<int> iso = iso_set(v, ctx.lattice);
    for (int i : iso)
      for (int m : ctx.lattice.classes[ctx.lattice.class_of[i]].member_indices)
        CHECK(iso.count(m) == 1);
  }
}

TEST_CASE("trivial summand detection") {
  Ctx c2("C2");
  CHECK_FALSE(Representation::build(c2.group, RepSpec::sign())
                  .contains_trivial_summand());
  CHECK(Representation::build(c2.group, RepSpec::permutation(2))
            .contains_trivial_summand());
  CHECK(Representation::build(c2.group, RepSpec::regular())
            .contains_trivial_summand());
  Ctx s3("S3");
  CHECK_FALSE(Representation::build(s3.group, RepSpec::standard())
                  .contains_trivial_summand());
}
