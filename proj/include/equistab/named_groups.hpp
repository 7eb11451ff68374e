#pragma once

#include <string>
#include <vector>

#include "equistab/group.hpp"

namespace equistab {

struct GroupSpec {
  std::string name;
  int degree = 1;
  std::vector<Perm> generators;
};

GroupSpec cyclic_group_spec(int n);
/// Adjacent transpositions; this generator choice makes the sign
/// representation (all generators to -1) well defined for every S_n.
GroupSpec symmetric_group_spec(int n);
GroupSpec alternating_group_spec(int n);
/// Dihedral group of order 2n acting on n points, n >= 3.
GroupSpec dihedral_group_spec(int n);
/// Quaternion group in its regular action on 8 points.
GroupSpec quaternion8_spec();
GroupSpec direct_product_spec(const GroupSpec& a, const GroupSpec& b);

/// Parses "C6", "S4", "A4", "D4", "Q8" and x-products like "C2xC4".
GroupSpec parse_group_name(const std::string& name);

}  // namespace equistab
