#pragma once

#include <vector>

#include "equistab/group.hpp"
#include "equistab/rep.hpp"

namespace equistab {

/// A conjugation- and intersection-closed set of subgroups, stored as sorted
/// indices into the lattice, together with its ordered conjugacy classes
/// (non-increasing order, the enumeration convention shared with the
/// lattice).
struct IsotropyFamily {
  const SubgroupLattice* lattice = nullptr;
  std::vector<int> members;        // sorted subgroup indices
  std::vector<int> class_indices;  // lattice class indices, enumeration order

  bool contains(int subgroup_index) const;
  int num_classes() const { return static_cast<int>(class_indices.size()); }
};

/// Least superset of the seeds closed under conjugation and pairwise
/// intersection; computed by fixpoint iteration.
IsotropyFamily family_closure(const SubgroupLattice& lattice,
                              const std::vector<std::vector<int>>& seeds);

/// Isotropy of a join: A, B and all pairwise intersections.
std::vector<int> join_isotropy(const SubgroupLattice& lattice,
                               const std::vector<int>& a,
                               const std::vector<int>& b);

/// Fixed-point dimensions of the orbit-type filtration X_q of a linear
/// sphere, at every level q = 0..r over the full lattice class enumeration.
///
/// table(q, H) is the largest sphere dimension over subgroups K >= H lying in
/// the sphere's isotropy set with class index <= q; -1 when no such K exists.
struct FiltrationTable {
  const SubgroupLattice* lattice = nullptr;
  std::vector<int> sphere_dims;         // per subgroup: dim X^H
  std::vector<std::vector<int>> table;  // [q][subgroup], q = 0..num_classes

  int levels() const { return static_cast<int>(table.size()) - 1; }
  int at(int q, int subgroup_index) const { return table[q][subgroup_index]; }
};

/// sphere_dims holds dim S(V)^H per lattice subgroup (so fixed dim minus 1).
FiltrationTable filtration_dims(const std::vector<int>& sphere_dims,
                                const SubgroupLattice& lattice);

}  // namespace equistab
