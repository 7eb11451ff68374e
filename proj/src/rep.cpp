#include "equistab/rep.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "equistab/errors.hpp"

namespace equistab {

RepSpec RepSpec::permutation(int pts) {
  RepSpec s;
  s.kind = Kind::Permutation;
  s.points = pts;
  return s;
}
RepSpec RepSpec::standard() {
  RepSpec s;
  s.kind = Kind::Standard;
  return s;
}
RepSpec RepSpec::sign() {
  RepSpec s;
  s.kind = Kind::Sign;
  return s;
}
RepSpec RepSpec::regular() {
  RepSpec s;
  s.kind = Kind::Regular;
  return s;
}
RepSpec RepSpec::trivial(int dim) {
  RepSpec s;
  s.kind = Kind::Trivial;
  s.points = dim;
  return s;
}
RepSpec RepSpec::rotation(int n, int j) {
  RepSpec s;
  s.kind = Kind::Rotation;
  s.rotation_n = n;
  s.rotation_j = j;
  return s;
}
RepSpec RepSpec::matrices(std::vector<Eigen::MatrixXd> gens) {
  RepSpec s;
  s.kind = Kind::Matrices;
  s.generator_matrices = std::move(gens);
  return s;
}
RepSpec RepSpec::cosets(const Subgroup& H) {
  RepSpec s;
  s.kind = Kind::Cosets;
  s.coset_subgroup_elements = H.members.indices();
  return s;
}
RepSpec RepSpec::direct_sum(std::vector<RepSpec> parts) {
  RepSpec s;
  s.kind = Kind::DirectSum;
  s.parts = std::move(parts);
  return s;
}
RepSpec RepSpec::repeat(RepSpec part, int times) {
  RepSpec s;
  s.kind = Kind::Repeat;
  s.parts.push_back(std::move(part));
  s.times = times;
  return s;
}

std::string RepSpec::label() const {
  switch (kind) {
    case Kind::Permutation:
      return "permutation(" + std::to_string(points) + ")";
    case Kind::Standard:
      return "standard";
    case Kind::Sign:
      return "sign";
    case Kind::Regular:
      return "regular";
    case Kind::Trivial:
      return "trivial(" + std::to_string(points) + ")";
    case Kind::Rotation:
      return "rotation(" + std::to_string(rotation_n) + "," +
             std::to_string(rotation_j) + ")";
    case Kind::Matrices:
      return "matrices";
    case Kind::Cosets:
      return "cosets";
    case Kind::DirectSum: {
      std::string out = "sum(";
      for (size_t i = 0; i < parts.size(); ++i)
        out += (i ? "," : "") + parts[i].label();
      return out + ")";
    }
    case Kind::Repeat:
      return "repeat(" + parts[0].label() + "," + std::to_string(times) + ")";
  }
  return "?";
}

namespace {

constexpr double kMatrixTol = 1e-8;

std::vector<Eigen::MatrixXd> permutation_matrices(const PermGroup& G) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(G.order());
  const int d = G.degree();
  for (int e = 0; e < G.order(); ++e) {
    const Perm& p = G.element(e);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) m(p[i], i) = 1.0;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Eigen::MatrixXd> action_matrices(const PermGroup& G,
                                             const std::vector<Perm>& action) {
  // action[e] is a permutation of an abstract point set
  std::vector<Eigen::MatrixXd> out;
  out.reserve(G.order());
  const int d = static_cast<int>(action[0].size());
  for (int e = 0; e < G.order(); ++e) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) m(action[e][i], i) = 1.0;
    out.push_back(std::move(m));
  }
  return out;
}

/// Orthonormal basis of the complement of (1,...,1) in R^d, as rows.
Eigen::MatrixXd ones_complement_basis(int d) {
  Eigen::MatrixXd B(d - 1, d);
  B.setZero();
  for (int k = 1; k < d; ++k) {
    double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) B(k - 1, i) = 1.0 / norm;
    B(k - 1, k) = -static_cast<double>(k) / norm;
  }
  return B;
}

/// Extends per-generator matrices along BFS words; the homomorphism check in
/// validate() rejects assignments that do not define a representation.
std::vector<Eigen::MatrixXd> extend_generators(
    const PermGroup& G, const std::vector<Eigen::MatrixXd>& gens, int dim) {
  if (gens.size() != G.generators().size())
    throw ParseError("expected one matrix per group generator (" +
                     std::to_string(G.generators().size()) + "), got " +
                     std::to_string(gens.size()));
  for (const auto& m : gens)
    if (m.rows() != dim || m.cols() != dim)
      throw ParseError("generator matrices must all be square of one size");
  std::vector<Eigen::MatrixXd> out(G.order());
  out[0] = Eigen::MatrixXd::Identity(dim, dim);
  for (int e = 1; e < G.order(); ++e) {
    PermGroup::Provenance pv = G.provenance(e);
    out[e] = out[pv.parent] * gens[pv.gen_index];
  }
  return out;
}

}  // namespace

void Representation::validate() const {
  if (dim_ == 0) return;
  const PermGroup& G = *group_;
  const int n = G.order();
  double worst_orth = 0, worst_hom = 0;
  for (int e = 0; e < n; ++e) {
    double dev = (matrices_[e] * matrices_[e].transpose() -
                  Eigen::MatrixXd::Identity(dim_, dim_))
                     .cwiseAbs()
                     .maxCoeff();
    worst_orth = std::max(worst_orth, dev);
  }
  if (worst_orth > kMatrixTol)
    throw ParseError("representation matrices are not orthogonal; worst "
                     "deviation " +
                     std::to_string(worst_orth));

  auto hom_dev = [&](int i, int j) {
    return (matrices_[i] * matrices_[j] - matrices_[G.mult(i, j)])
        .cwiseAbs()
        .maxCoeff();
  };
  if (n * n <= 4096) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) worst_hom = std::max(worst_hom, hom_dev(i, j));
  } else {
    std::vector<int> gen_idx;
    for (const Perm& g : G.generators()) gen_idx.push_back(G.index_of(g));
    for (int i = 0; i < n; ++i)
      for (int g : gen_idx) {
        worst_hom = std::max(worst_hom, hom_dev(i, g));
        worst_hom = std::max(worst_hom, hom_dev(g, i));
      }
    for (unsigned t = 0; t < 4096; ++t)
      worst_hom = std::max(
          worst_hom, hom_dev(static_cast<int>((t * 2654435761u) % n),
                             static_cast<int>((t * 40503u + 13u) % n)));
  }
  if (worst_hom > kMatrixTol)
    throw ParseError(
        "matrices do not define a homomorphism; worst deviation " +
        std::to_string(worst_hom));

  // character is a class function
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    for (int g = 0; g < n; ++g) {
      int y = G.conj(g, x);
      seen[y] = 1;
      if (std::abs(character_[y] - character_[x]) > kMatrixTol)
        throw ParseError("character is not constant on conjugacy classes");
    }
  }
}

Representation Representation::build(const PermGroup& G, const RepSpec& spec) {
  Representation r;
  r.group_ = &G;
  r.label_ = spec.label();
  using K = RepSpec::Kind;

  switch (spec.kind) {
    case K::Permutation: {
      if (spec.points != G.degree())
        throw ParseError("permutation block: points must equal the group "
                         "degree " +
                         std::to_string(G.degree()));
      r.dim_ = G.degree();
      r.matrices_ = permutation_matrices(G);
      break;
    }
    case K::Standard: {
      if (G.degree() < 2)
        throw ParseError("standard block needs degree >= 2");
      r.dim_ = G.degree() - 1;
      Eigen::MatrixXd B = ones_complement_basis(G.degree());
      auto perms = permutation_matrices(G);
      r.matrices_.reserve(G.order());
      for (const auto& p : perms) r.matrices_.push_back(B * p * B.transpose());
      break;
    }
    case K::Sign: {
      std::vector<Eigen::MatrixXd> gens(
          G.generators().size(), -Eigen::MatrixXd::Identity(1, 1));
      r.dim_ = 1;
      r.matrices_ = extend_generators(G, gens, 1);
      break;
    }
    case K::Regular: {
      std::vector<Perm> action(G.order());
      for (int e = 0; e < G.order(); ++e) {
        action[e].resize(G.order());
        for (int x = 0; x < G.order(); ++x) action[e][x] = G.mult(e, x);
      }
      r.dim_ = G.order();
      r.matrices_ = action_matrices(G, action);
      break;
    }
    case K::Trivial: {
      if (spec.points < 0) throw ParseError("trivial block: dim must be >= 0");
      r.dim_ = spec.points;
      r.matrices_.assign(G.order(),
                         Eigen::MatrixXd::Identity(r.dim_, r.dim_));
      break;
    }
    case K::Rotation: {
      const int n = spec.rotation_n;
      if (n != G.order())
        throw ParseError("rotation block: n must equal the group order");
      int gen = -1;
      for (int e = 0; e < G.order() && gen < 0; ++e)
        if (G.element_order(e) == n) gen = e;
      if (gen < 0)
        throw ParseError("rotation block requires a cyclic group");
      r.dim_ = 2;
      r.matrices_.assign(G.order(), Eigen::MatrixXd());
      int x = 0;
      for (int k = 0; k < n; ++k) {
        double a = 2.0 * std::numbers::pi * spec.rotation_j * k / n;
        Eigen::MatrixXd m(2, 2);
        m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
        r.matrices_[x] = std::move(m);
        x = G.mult(x, gen);
      }
      break;
    }
    case K::Matrices: {
      if (spec.generator_matrices.empty() && !G.generators().empty())
        throw ParseError("matrix block: no matrices given");
      r.dim_ = spec.generator_matrices.empty()
                   ? 1
                   : static_cast<int>(spec.generator_matrices[0].rows());
      r.matrices_ = extend_generators(G, spec.generator_matrices, r.dim_);
      break;
    }
    case K::Cosets: {
      ElementSet members = close_subset(G, spec.coset_subgroup_elements);
      std::vector<int> coset_of(G.order(), -1);
      std::vector<int> reps;
      for (int x = 0; x < G.order(); ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : members.indices()) coset_of[G.mult(x, h)] = c;
      }
      std::vector<Perm> action(G.order());
      for (int e = 0; e < G.order(); ++e) {
        action[e].resize(reps.size());
        for (size_t c = 0; c < reps.size(); ++c)
          action[e][c] = coset_of[G.mult(e, reps[c])];
      }
      r.dim_ = static_cast<int>(reps.size());
      r.matrices_ = action_matrices(G, action);
      break;
    }
    case K::DirectSum: {
      if (spec.parts.empty())
        throw ParseError("direct_sum block: no parts given");
      Representation acc = build(G, spec.parts[0]);
      for (size_t i = 1; i < spec.parts.size(); ++i)
        acc = direct_sum(acc, build(G, spec.parts[i]));
      acc.label_ = spec.label();
      return acc;
    }
    case K::Repeat: {
      if (spec.parts.empty() || spec.times < 1)
        throw ParseError("repeat block: needs a part and times >= 1");
      Representation part = build(G, spec.parts[0]);
      Representation acc = part;
      for (int i = 1; i < spec.times; ++i) acc = direct_sum(acc, part);
      acc.label_ = spec.label();
      return acc;
    }
  }

  r.character_.resize(G.order());
  for (int e = 0; e < G.order(); ++e) r.character_[e] = r.matrices_[e].trace();
  r.validate();
  return r;
}

Representation Representation::direct_sum(const Representation& a,
                                          const Representation& b) {
  if (a.group_ != b.group_)
    throw ParseError("direct sum requires representations of one group");
  Representation r;
  r.group_ = a.group_;
  r.dim_ = a.dim_ + b.dim_;
  r.label_ = "sum(" + a.label_ + "," + b.label_ + ")";
  r.matrices_.reserve(a.matrices_.size());
  for (size_t e = 0; e < a.matrices_.size(); ++e) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r.dim_, r.dim_);
    m.topLeftCorner(a.dim_, a.dim_) = a.matrices_[e];
    m.bottomRightCorner(b.dim_, b.dim_) = b.matrices_[e];
    r.matrices_.push_back(std::move(m));
  }
  r.character_.resize(a.character_.size());
  for (size_t e = 0; e < a.character_.size(); ++e)
    r.character_[e] = a.character_[e] + b.character_[e];
  return r;
}

bool Representation::contains_trivial_summand() const {
  return fixed_dim(*this, full_subgroup(*group_)) >= 1;
}

int fixed_dim(const Representation& V, const Subgroup& H) {
  const std::vector<int> hs = H.members.indices();
  double avg = 0;
  for (int h : hs) avg += V.character(h);
  avg /= static_cast<double>(hs.size());
  double rounded = std::round(avg);
  if (std::abs(avg - rounded) >= 1e-6)
    throw NumericError("character average " + std::to_string(avg) +
                       " is not integral");
  int by_character = static_cast<int>(rounded);
  if (by_character < 0)
    throw NumericError("negative fixed-point dimension from character");

  if (V.dim() == 0) return 0;
  // cross-check: rank of the averaging projector
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(V.dim(), V.dim());
  for (int h : hs) P += V.matrix(h);
  P /= static_cast<double>(hs.size());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P);
  const auto& sv = svd.singularValues();
  double thresh = 1e-8 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  if (rank != by_character)
    throw NumericError("fixed-dim cross-check failed: character average " +
                       std::to_string(by_character) + " vs projector rank " +
                       std::to_string(rank));
  return by_character;
}

int sphere_dim(const Representation& V, const Subgroup& H) {
  return fixed_dim(V, H) - 1;
}

FixedDimTable fixed_dim_table(const Representation& V,
                              const SubgroupLattice& lattice) {
  FixedDimTable t;
  t.lattice = &lattice;
  t.dims.reserve(lattice.num_subgroups());
  for (const Subgroup& H : lattice.subgroups)
    t.dims.push_back(fixed_dim(V, H));
  // monotone along inclusion and conjugation-invariant by construction;
  // dims(trivial) must be the full dimension
  if (t.dims.front() != V.dim())
    throw NumericError("fixed dims at the trivial subgroup must equal dim");
  return t;
}

std::vector<int> isotropy_from_fixed_dims(const std::vector<int>& fd,
                                          const SubgroupLattice& lattice) {
  std::vector<int> out;
  for (int i = 0; i < lattice.num_subgroups(); ++i) {
    if (fd[i] < 1) continue;
    bool strict = true;
    for (int j : lattice.minimal_overgroups[i]) {
      if (fd[j] >= fd[i]) {
        strict = false;
        break;
      }
    }
    if (strict) out.push_back(i);
  }
  return out;
}

std::vector<int> isotropy_of_sphere(const Representation& V,
                                    const SubgroupLattice& lattice) {
  return isotropy_from_fixed_dims(fixed_dim_table(V, lattice).dims, lattice);
}

}  // namespace equistab
