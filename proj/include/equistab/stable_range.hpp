#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equistab/family.hpp"
#include "equistab/rep.hpp"

namespace equistab {

inline constexpr int kDefaultHorizon = 64;

/// The block representations U_1, U_2, ... arranged in a cyclic schedule, so
/// every block recurs infinitely often (which is what makes the stable-range
/// statements applicable at all).
class Universe {
 public:
  Universe(const SubgroupLattice& lattice, std::vector<Representation> blocks);

  const SubgroupLattice& lattice() const { return *lattice_; }
  const std::vector<Representation>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }

  /// 1-based schedule position -> block index.
  int block_at(int i) const { return (i - 1) % num_blocks(); }
  const FixedDimTable& block_dims(int b) const { return block_dims_[b]; }
  const std::vector<int>& block_isotropy(int b) const { return block_iso_[b]; }

  /// dim (U_m + ... + U_n)^H for a lattice subgroup index.
  int range_fixed_dim(int m, int n, int subgroup_index) const;
  /// Isotropy of S(U_m + ... + U_n), via the join-isotropy fold.
  std::vector<int> range_isotropy(int m, int n) const;

  const IsotropyFamily& family() const { return family_; }
  bool contains_trivial_block() const { return has_trivial_block_; }

 private:
  const SubgroupLattice* lattice_;
  std::vector<Representation> blocks_;
  std::vector<FixedDimTable> block_dims_;
  std::vector<std::vector<int>> block_iso_;
  IsotropyFamily family_;
  bool has_trivial_block_ = false;
};

enum class Profile {
  FarInU,
  Theorem1Stabilization,
  Theorem1Limit,
  Suspension,
  Prop61,
};

std::string profile_name(Profile p);
std::optional<Profile> profile_from_name(const std::string& name);

struct Inequality {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool strict = false;  // lhs > rhs when strict, otherwise lhs >= rhs
  bool ok = false;

  bool operator==(const Inequality&) const = default;
};

struct ClassWitness {
  int lattice_class = -1;
  std::string label;
  std::vector<Inequality> checks;

  bool operator==(const ClassWitness&) const = default;
};

struct IsoCheck {
  std::string name;
  bool equal = false;
  std::vector<std::string> missing;  // class labels required but absent
  std::vector<std::string> extra;

  bool operator==(const IsoCheck&) const = default;
};

/// Witnessed inequalities for one of the stable-range profiles, with the
/// indices they were evaluated at. pass is true exactly when every recorded
/// check holds.
struct StabilityCertificate {
  std::string profile;
  int k = 0;
  int m = 0;
  int n = 0;
  std::vector<IsoCheck> iso_checks;
  std::vector<ClassWitness> witnesses;
  bool pass = false;

  bool operator==(const StabilityCertificate&) const = default;
};

std::string class_label(const SubgroupLattice& lattice, int class_index);

/// Conditions (1)-(3) for X = S(U_{m..n}):
///   (1) Iso(X) equals the family, (2) dim X^H >= k on the family,
///   (3) dim X^H - max_{K > H} dim X^K >= k, empty max counting as -1.
StabilityCertificate check_far_in_u(const Universe& u, int m, int n, int k);

/// Minimal indices at which a profile's inequalities hold:
///   far-in-U            minimal n with check_far_in_u(1, n, k) passing;
///   theorem1-stabilization  minimal (m, n0), scanning m then n0, such that
///       X = S(U_{<=m}) has Iso(X) = F and gaps >= k+1 on F, and
///       Y' = S(U_{m+1..n0}) has Iso(Y') = F and dim Y'^H >= k+1 on F;
///   theorem1-limit      minimal n with Iso = F, dims >= k+2, gaps >= k+2;
///   suspension          minimal n with Iso = F and dims >= k+2.
/// Throws SearchLimitError when the horizon is exhausted.
StabilityCertificate stable_range(const Universe& u, int k, Profile profile,
                                  int horizon = kDefaultHorizon);

/// Re-evaluates a searched profile's inequalities at fixed indices; this is
/// what stable_range scans, exposed for minimality and monotonicity checks.
StabilityCertificate check_profile_at(const Universe& u, int k,
                                      Profile profile, int m, int n);

/// The five hypotheses of the stabilization proposition for linear spheres
/// X = S(VX), Y = S(VY), Z = S(VZ); failure is a verdict, not an error.
StabilityCertificate check_prop61_hypotheses(const SubgroupLattice& lattice,
                                             const Representation& VX,
                                             const Representation& VY,
                                             const Representation& VZ, int k);

}  // namespace equistab
