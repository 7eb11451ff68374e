#pragma once

#include <string>
#include <vector>

#include "equistab/abelian.hpp"
#include "equistab/family.hpp"
#include "equistab/stable_range.hpp"

namespace equistab {

/// omega_0 of BWH with a disjoint basepoint: always Z.
FgAbelianGroup omega0();
/// omega_1: Z/2 from the sphere summand plus H_1(BWH) = WH abelianized,
/// renormalized into an invariant-factor chain.
FgAbelianGroup omega1(const FgAbelianGroup& weyl_abelianization);

struct ClassSummand {
  int lattice_class = -1;
  std::string label;
  int subgroup_order = 0;
  int class_size = 0;
  int weyl_order = 0;
  FgAbelianGroup weyl_abelianization;
  FgAbelianGroup omega0;
  FgAbelianGroup omega1;

  bool operator==(const ClassSummand&) const = default;
};

/// The evaluated splitting: one summand per conjugacy class in the family,
/// with closed forms in degrees 0 and 1 and a symbolic tail above.
struct SplittingReport {
  std::vector<ClassSummand> classes;
  FgAbelianGroup pi0;
  FgAbelianGroup pi1;
  std::vector<std::string> symbolic_tail;  // one entry per class, i >= 2
  bool pointed = false;
  bool doubled = false;  // pointed case without a trivial block

  bool operator==(const SplittingReport&) const = default;
};

SplittingReport unpointed_limit_groups(const PermGroup& G,
                                       const IsotropyFamily& family);

/// Pointed variant: identical when a trivial block is present, otherwise
/// every summand doubles (the two wedge copies contribute independently).
SplittingReport pointed_limit_groups(const PermGroup& G,
                                     const IsotropyFamily& family,
                                     bool trivial_block_present);

struct BurnsideCrossCheck {
  enum class Status { Pass, Fail, NotApplicable };
  Status status = Status::NotApplicable;
  int burnside_rank = 0;  // number of subgroup conjugacy classes of G
  int family_rank = 0;
  std::vector<std::string> missing_classes;
  std::string detail;
};

/// Applicable when some block has the regular character; then the family
/// must consist of all subgroup classes and the degree-0 rank must equal the
/// Burnside ring rank.
BurnsideCrossCheck burnside_cross_check(const Universe& u);

}  // namespace equistab
