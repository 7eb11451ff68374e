#pragma once

#include <string>
#include <vector>

#include "equistab/group.hpp"

namespace equistab {

/// A finitely generated abelian group: free rank plus torsion in invariant
/// factor form, i.e. an ascending divisibility chain d1 | d2 | ... with every
/// di >= 2.
struct FgAbelianGroup {
  int free_rank = 0;
  std::vector<long long> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  long long torsion_order() const;
  bool operator==(const FgAbelianGroup& o) const = default;

  /// "Z^2 ⊕ Z/2 ⊕ Z/6", or "0" for the trivial group.
  std::string pretty() const;

  static FgAbelianGroup free(int rank) { return {rank, {}}; }
  static FgAbelianGroup cyclic(long long n);
  /// Normalizes an arbitrary list of cyclic orders into an invariant-factor
  /// chain by primary decomposition and CRT recombination.
  static FgAbelianGroup from_cyclic_factors(const std::vector<long long>& cs);
  static FgAbelianGroup direct_sum(const FgAbelianGroup& a,
                                   const FgAbelianGroup& b);
};

/// Invariant factors of T/[T,T]; free rank is always 0 for finite input.
FgAbelianGroup abelianization(const TableGroup& T);
FgAbelianGroup abelianization(const PermGroup& G);
FgAbelianGroup abelianization(const QuotientGroup& Q);

/// The commutator subgroup of a table group, as sorted element indices.
std::vector<int> commutator_subgroup(const TableGroup& T);

}  // namespace equistab
