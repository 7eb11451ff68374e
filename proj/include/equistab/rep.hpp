#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "equistab/group.hpp"

namespace equistab {

/// Construction recipe for an orthogonal real representation.
struct RepSpec {
  enum class Kind {
    Permutation,  // natural action on {0..degree-1}
    Standard,     // natural action minus the trivial diagonal summand
    Sign,         // every generator acts by -1; validated for consistency
    Regular,      // left multiplication on the group elements
    Trivial,      // identity action, given dimension
    Rotation,     // 2-dim rotation by 2*pi*j/n of a cyclic group of order n
    Matrices,     // explicit orthogonal matrices, one per generator
    Cosets,       // permutation action on left cosets of a subgroup
    DirectSum,
    Repeat,
  };

  Kind kind = Kind::Trivial;
  int points = 1;  // Permutation: expected degree; Trivial: dimension
  int rotation_n = 0;
  int rotation_j = 0;
  std::vector<Eigen::MatrixXd> generator_matrices;
  std::vector<int> coset_subgroup_elements;  // element indices generating it
  std::vector<RepSpec> parts;
  int times = 1;

  static RepSpec permutation(int pts);
  static RepSpec standard();
  static RepSpec sign();
  static RepSpec regular();
  static RepSpec trivial(int dim = 1);
  static RepSpec rotation(int n, int j);
  static RepSpec matrices(std::vector<Eigen::MatrixXd> gens);
  static RepSpec cosets(const Subgroup& H);
  static RepSpec direct_sum(std::vector<RepSpec> parts);
  static RepSpec repeat(RepSpec part, int times);

  std::string label() const;
};

/// An orthogonal real representation with cached character. Invariants
/// (orthogonality, homomorphism property, class-constant character) are
/// validated on construction to 1e-8.
class Representation {
 public:
  static Representation build(const PermGroup& G, const RepSpec& spec);
  static Representation direct_sum(const Representation& a,
                                   const Representation& b);

  const PermGroup& group() const { return *group_; }
  int dim() const { return dim_; }
  const Eigen::MatrixXd& matrix(int elem) const { return matrices_[elem]; }
  double character(int elem) const { return character_[elem]; }
  const std::string& label() const { return label_; }

  /// True when the trivial representation is a summand, i.e. dim V^G >= 1.
  bool contains_trivial_summand() const;

 private:
  Representation() = default;
  const PermGroup* group_ = nullptr;
  int dim_ = 0;
  std::vector<Eigen::MatrixXd> matrices_;
  std::vector<double> character_;
  std::string label_;

  void validate() const;
};

/// dim V^H by the character average (1/|H|) sum chi(h), rounded; the rounding
/// deviation must stay below 1e-6 and the result is cross-checked against the
/// numerical rank of the averaging projector.
int fixed_dim(const Representation& V, const Subgroup& H);

/// dim S(V)^H = fixed_dim - 1; the empty sphere reports -1.
int sphere_dim(const Representation& V, const Subgroup& H);

/// Fixed-point dimensions across a whole lattice, index-aligned with it.
struct FixedDimTable {
  const SubgroupLattice* lattice = nullptr;
  std::vector<int> dims;

  int at(int subgroup_index) const { return dims[subgroup_index]; }
};

FixedDimTable fixed_dim_table(const Representation& V,
                              const SubgroupLattice& lattice);

/// Subgroup indices H with dim V^H >= 1 whose every minimal overgroup drops
/// the fixed-point dimension; this is exactly Iso of the unit sphere S(V).
std::vector<int> isotropy_from_fixed_dims(const std::vector<int>& fd,
                                          const SubgroupLattice& lattice);

std::vector<int> isotropy_of_sphere(const Representation& V,
                                    const SubgroupLattice& lattice);

}  // namespace equistab
