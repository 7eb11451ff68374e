#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "equistab/abelian.hpp"
#include "equistab/errors.hpp"
#include "equistab/group.hpp"
#include "equistab/named_groups.hpp"
#include "oracles.hpp"

using namespace equistab;

namespace {

PermGroup make(const std::string& name) {
  GroupSpec s = parse_group_name(name);
  return PermGroup::enumerate(s.degree, s.generators);
}

std::vector<int> class_orders(const std::vector<SubgroupConjClass>& classes) {
  std::vector<int> out;
  for (const auto& c : classes) out.push_back(c.class_order);
  return out;
}

}  // namespace

TEST_CASE("element enumeration") {
  PermGroup c2 = PermGroup::enumerate(2, {Perm{1, 0}});
  CHECK(c2.order() == 2);

  PermGroup s3 = PermGroup::enumerate(3, {Perm{1, 0, 2}, Perm{1, 2, 0}});
  CHECK(s3.order() == 6);

  PermGroup triv = PermGroup::enumerate(4, {});
  CHECK(triv.order() == 1);
  CHECK(is_identity(triv.element(0)));
}

TEST_CASE("enumeration is deterministic breadth-first") {
  PermGroup a = make("S3");
  PermGroup b = make("S3");
  for (int i = 0; i < a.order(); ++i) CHECK(a.element(i) == b.element(i));
  CHECK(is_identity(a.element(0)));
}

TEST_CASE("order cap reported") {
  GroupSpec s4 = parse_group_name("S4");
  CHECK_THROWS_WITH_AS(PermGroup::enumerate(s4.degree, s4.generators, 10),
                       doctest::Contains("10"), SizeLimitError);
}

TEST_CASE("multiplication table is a homomorphic image") {
  PermGroup g = make("D4");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int t = 0; t < 200; ++t) {
    int i = pick(rng), j = pick(rng);
    CHECK(g.element(g.mult(i, j)) == compose(g.element(i), g.element(j)));
    CHECK(g.mult(i, g.inv(i)) == 0);
  }
}

TEST_CASE("all_subgroups counts") {
  PermGroup s3 = make("S3");
  auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);
  std::multiset<int> orders;
  for (const auto& h : subs) orders.insert(h.order);
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 6});

  CHECK(all_subgroups(make("C4")).size() == 3);
  CHECK(all_subgroups(make("C1")).size() == 1);
}

TEST_CASE("all_subgroups agrees with the subset-closure oracle") {
  for (const char* name :
       {"C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "C2xC4", "C2xC2xC2",
        "C12", "S3", "D4", "D5", "D6", "Q8", "A4", "S4", "S3xC2"}) {
    CAPTURE(name);
    PermGroup g = make(name);
    REQUIRE(g.order() <= 24);
    auto subs = all_subgroups(g);
    std::set<ElementSet> impl;
    for (const auto& h : subs) impl.insert(h.members);
    CHECK(impl.size() == subs.size());
    CHECK(impl == oracle::subgroups_by_subset_closure(g));
  }
}

TEST_CASE("subgroups are valid and Lagrange holds") {
  for (const char* name : {"S4", "Q8", "D6"}) {
    PermGroup g = make(name);
    for (const auto& h : all_subgroups(g)) {
      CHECK_NOTHROW(checked_subgroup(g, h.members));
      CHECK(g.order() % h.order == 0);
    }
  }
}

TEST_CASE("conjugacy classes of subgroups") {
  PermGroup s3 = make("S3");
  auto classes = conjugacy_classes_of_subgroups(s3, all_subgroups(s3));
  CHECK(class_orders(classes) == std::vector<int>{6, 3, 2, 1});

  PermGroup c2 = make("C2");
  CHECK(class_orders(conjugacy_classes_of_subgroups(c2, all_subgroups(c2))) ==
        std::vector<int>{2, 1});

  PermGroup q8 = make("Q8");
  CHECK(class_orders(conjugacy_classes_of_subgroups(q8, all_subgroups(q8))) ==
        std::vector<int>{8, 4, 4, 4, 2, 1});
}

TEST_CASE("class ordering and conjugation stability") {
  for (const char* name : {"S4", "D4", "Q8", "A4"}) {
    CAPTURE(name);
    PermGroup g = make(name);
    SubgroupLattice lat = build_lattice(g);
    for (size_t c = 0; c + 1 < lat.classes.size(); ++c)
      CHECK(lat.classes[c].class_order >= lat.classes[c + 1].class_order);
    for (const auto& cls : lat.classes) {
      std::set<int> members(cls.member_indices.begin(),
                            cls.member_indices.end());
      for (int m : cls.member_indices) {
        for (int gg = 0; gg < g.order(); ++gg) {
          Subgroup conj = conjugate_subgroup(g, lat.subgroups[m], gg);
          CHECK(members.count(lat.index_of(conj)) == 1);
          CHECK(conj.order == cls.class_order);
        }
      }
    }
    // every subgroup in exactly one class
    std::vector<int> covered(lat.num_subgroups(), 0);
    for (const auto& cls : lat.classes)
      for (int m : cls.member_indices) ++covered[m];
    CHECK(std::all_of(covered.begin(), covered.end(),
                      [](int c) { return c == 1; }));
  }
}

TEST_CASE("normalizer") {
  PermGroup s3 = make("S3");
  int t = s3.index_of(Perm{1, 0, 2});
  REQUIRE(t >= 0);
  Subgroup h = make_subgroup(s3, close_subset(s3, {t}));
  REQUIRE(h.order == 2);
  Subgroup n = normalizer(s3, h);
  CHECK(n.members == h.members);

  CHECK(normalizer(s3, trivial_subgroup(s3)).order == 6);
  CHECK(normalizer(s3, full_subgroup(s3)).order == 6);
}

TEST_CASE("weyl groups") {
  PermGroup s3 = make("S3");
  int t = s3.index_of(Perm{1, 0, 2});
  Subgroup h = make_subgroup(s3, close_subset(s3, {t}));
  CHECK(weyl_group(s3, h).order() == 1);
  CHECK(weyl_group(s3, trivial_subgroup(s3)).order() == 6);

  PermGroup q8 = make("Q8");
  // center of Q8 is the unique order-2 subgroup
  Subgroup center;
  for (const auto& s : all_subgroups(q8))
    if (s.order == 2) center = s;
  REQUIRE(center.order == 2);
  CHECK(weyl_group(q8, center).order() == 4);
}

TEST_CASE("weyl coset tables are groups") {
  for (const char* name : {"S4", "Q8", "D6", "A4"}) {
    PermGroup g = make(name);
    for (const auto& h : all_subgroups(g)) {
      QuotientGroup w = weyl_group(g, h);
      REQUIRE(w.order() <= 48);
      const int m = w.order();
      // identity coset is index 0
      for (int a = 0; a < m; ++a) {
        CHECK(w.table[0][a] == a);
        CHECK(w.table[a][0] == a);
      }
      // associativity, exhaustive
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c)
            CHECK(w.table[w.table[a][b]][c] == w.table[a][w.table[b][c]]);
      // inverses
      for (int a = 0; a < m; ++a) {
        bool has_inv = false;
        for (int b = 0; b < m; ++b)
          if (w.table[a][b] == 0 && w.table[b][a] == 0) has_inv = true;
        CHECK(has_inv);
      }
      CHECK(m * h.order == normalizer(g, h).order);
    }
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(make("S3")).torsion == std::vector<long long>{2});
  CHECK(abelianization(make("Q8")).torsion == std::vector<long long>{2, 2});
  CHECK(abelianization(make("C1")) == FgAbelianGroup{});
  CHECK(abelianization(make("A4")).torsion == std::vector<long long>{3});
  CHECK(abelianization(make("C6")).torsion == std::vector<long long>{6});
  CHECK(abelianization(make("D4")).torsion == std::vector<long long>{2, 2});
  CHECK(abelianization(make("S4")).torsion == std::vector<long long>{2});
}

TEST_CASE("intersection") {
  PermGroup s3 = make("S3");
  auto subs = all_subgroups(s3);
  std::vector<Subgroup> order2;
  for (const auto& h : subs)
    if (h.order == 2) order2.push_back(h);
  REQUIRE(order2.size() == 3);
  CHECK(intersect(order2[0], order2[1]).order == 1);
  CHECK(intersect(order2[0], order2[0]).members == order2[0].members);

  PermGroup c2 = make("C2");
  Subgroup other = trivial_subgroup(c2);
  CHECK_THROWS_AS((void)intersect(order2[0], other), ParseError);
}

TEST_CASE("minimal overgroups") {
  PermGroup s3 = make("S3");
  SubgroupLattice lat = build_lattice(s3);
  auto mins = minimal_overgroups(trivial_subgroup(s3), lat);
  CHECK(mins.size() == 4);
  std::multiset<int> orders;
  for (int m : mins) orders.insert(lat.subgroups[m].order);
  CHECK(orders == std::multiset<int>{2, 2, 2, 3});
}
