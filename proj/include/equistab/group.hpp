#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equistab/bitset.hpp"
#include "equistab/perm.hpp"

namespace equistab {

inline constexpr int kDefaultOrderCap = 2000;

/// A finite permutation group, fully enumerated.
///
/// Elements are indexed 0..order-1 in breadth-first order from the identity
/// (generators applied on the right in input order), so index 0 is always the
/// identity and the ordering is reproducible. Multiplication and inverse
/// tables are precomputed; mult(i,j) composes as functions, element j first.
class PermGroup {
 public:
  static PermGroup enumerate(int degree, std::vector<Perm> generators,
                             int cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& generators() const { return generators_; }

  int mult(int i, int j) const { return mult_[i * order_ + j]; }
  int inv(int i) const { return inv_[i]; }
  int conj(int g, int x) const { return mult(mult(g, x), inv(g)); }

  int element_order(int i) const;
  /// Index of a permutation, or -1 if it is not a group element.
  int index_of(const Perm& p) const;

  /// BFS word: element i equals element(parent) * generator(gen_index);
  /// the identity reports {-1, -1}.
  struct Provenance {
    int parent;
    int gen_index;
  };
  Provenance provenance(int i) const { return provenance_[i]; }

 private:
  PermGroup() = default;
  int degree_ = 0;
  int order_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<Provenance> provenance_;
  std::vector<uint16_t> mult_;
  std::vector<int> inv_;
};

struct Subgroup {
  const PermGroup* parent = nullptr;
  ElementSet members;
  int order = 0;

  bool contains(int elem_index) const { return members.test(elem_index); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

/// Canonical order: by order, then by membership bitset.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

/// Closure of {identity} ∪ seeds under multiplication.
ElementSet close_subset(const PermGroup& G, const std::vector<int>& seeds);

Subgroup make_subgroup(const PermGroup& G, const ElementSet& members);
/// Validating factory: checks closure, identity bit and Lagrange.
Subgroup checked_subgroup(const PermGroup& G, const ElementSet& members);

Subgroup trivial_subgroup(const PermGroup& G);
Subgroup full_subgroup(const PermGroup& G);
Subgroup conjugate_subgroup(const PermGroup& G, const Subgroup& H, int g);
bool is_normal_in(const PermGroup& G, const Subgroup& H, const Subgroup& N);

/// Every subgroup, exactly once, sorted by (order, canonical bitset).
/// Bottom-up: cyclic subgroups, then pairwise-join fixpoint.
std::vector<Subgroup> all_subgroups(const PermGroup& G);

struct SubgroupConjClass {
  Subgroup representative;
  std::vector<int> member_indices;  // into the sorted subgroup list
  int class_order = 0;              // order of the representative
};

/// Classes ordered with non-increasing class_order, ties by representative
/// bitset; hence a subgroup conjugate into a proper subgroup of H_j always
/// has a larger class index.
std::vector<SubgroupConjClass> conjugacy_classes_of_subgroups(
    const PermGroup& G, const std::vector<Subgroup>& subgroups);

Subgroup normalizer(const PermGroup& G, const Subgroup& H);
Subgroup intersect(const Subgroup& H, const Subgroup& K);

/// The full subgroup lattice with its conjugacy classes and covering
/// relations, computed once per group and shared by the other modules.
struct SubgroupLattice {
  const PermGroup* group = nullptr;
  std::vector<Subgroup> subgroups;
  std::vector<SubgroupConjClass> classes;
  std::vector<int> class_of;                       // subgroup -> class
  std::vector<std::vector<int>> minimal_overgroups;  // subgroup -> covers

  int index_of(const ElementSet& members) const;
  int index_of(const Subgroup& H) const { return index_of(H.members); }
  int num_subgroups() const { return static_cast<int>(subgroups.size()); }
  int num_classes() const { return static_cast<int>(classes.size()); }
};

SubgroupLattice build_lattice(const PermGroup& G);

std::vector<int> minimal_overgroups(const Subgroup& H,
                                    const SubgroupLattice& lattice);

/// N_G(H)/H with a complete coset multiplication table. Coset 0 contains the
/// identity; coset representatives are the first elements in enumeration
/// order.
struct QuotientGroup {
  const PermGroup* parent = nullptr;
  Subgroup numerator;
  Subgroup kernel;
  std::vector<int> coset_reps;
  std::vector<std::vector<int>> table;

  int order() const { return static_cast<int>(coset_reps.size()); }
};

QuotientGroup weyl_group(const PermGroup& G, const Subgroup& H);

/// An abstract finite group as a multiplication table; identity is index 0.
struct TableGroup {
  int n = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> inv;

  int element_order(int x) const;
  int power(int x, long long e) const;

  static TableGroup from_perm_group(const PermGroup& G);
  static TableGroup from_quotient(const QuotientGroup& Q);
  /// Direct sum of cyclic groups Z/c1 x ... x Z/cm as a table.
  static TableGroup from_cyclic_factors(const std::vector<int>& factors);
};

}  // namespace equistab
