#include "equistab/family.hpp"

#include <algorithm>
#include <set>

#include "equistab/errors.hpp"

namespace equistab {

bool IsotropyFamily::contains(int subgroup_index) const {
  return std::binary_search(members.begin(), members.end(), subgroup_index);
}

IsotropyFamily family_closure(const SubgroupLattice& lattice,
                              const std::vector<std::vector<int>>& seeds) {
  std::set<int> mem;
  for (const auto& s : seeds) mem.insert(s.begin(), s.end());

  bool grew = true;
  while (grew) {
    grew = false;
    // conjugation closure: complete every touched class
    std::set<int> next = mem;
    for (int i : mem) {
      const auto& cls = lattice.classes[lattice.class_of[i]];
      next.insert(cls.member_indices.begin(), cls.member_indices.end());
    }
    // pairwise intersections
    std::vector<int> cur(next.begin(), next.end());
    for (size_t a = 0; a < cur.size(); ++a) {
      for (size_t b = a + 1; b < cur.size(); ++b) {
        ElementSet meet = lattice.subgroups[cur[a]].members &
                          lattice.subgroups[cur[b]].members;
        int idx = lattice.index_of(meet);
        if (idx < 0)
          throw InternalError("intersection of subgroups missing from lattice");
        next.insert(idx);
      }
    }
    if (next != mem) {
      mem = std::move(next);
      grew = true;
    }
  }

  IsotropyFamily fam;
  fam.lattice = &lattice;
  fam.members.assign(mem.begin(), mem.end());
  std::set<int> classes;
  for (int i : fam.members) classes.insert(lattice.class_of[i]);
  fam.class_indices.assign(classes.begin(), classes.end());
  return fam;
}

std::vector<int> join_isotropy(const SubgroupLattice& lattice,
                               const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::set<int> out(a.begin(), a.end());
  out.insert(b.begin(), b.end());
  for (int i : a) {
    for (int j : b) {
      ElementSet meet =
          lattice.subgroups[i].members & lattice.subgroups[j].members;
      int idx = lattice.index_of(meet);
      if (idx < 0)
        throw InternalError("intersection of subgroups missing from lattice");
      out.insert(idx);
    }
  }
  return {out.begin(), out.end()};
}

FiltrationTable filtration_dims(const std::vector<int>& sphere_dims,
                                const SubgroupLattice& lattice) {
  const int n = lattice.num_subgroups();
  const int r = lattice.num_classes();
  if (static_cast<int>(sphere_dims.size()) != n)
    throw ParseError("sphere dimension table must cover the whole lattice");

  std::vector<int> fd(n);
  for (int i = 0; i < n; ++i) fd[i] = sphere_dims[i] + 1;
  std::vector<int> iso = isotropy_from_fixed_dims(fd, lattice);
  std::vector<bool> in_iso(n, false);
  for (int i : iso) in_iso[i] = true;

  FiltrationTable t;
  t.lattice = &lattice;
  t.sphere_dims = sphere_dims;
  t.table.assign(r + 1, std::vector<int>(n, -1));
  for (int q = 1; q <= r; ++q) {
    for (int h = 0; h < n; ++h) {
      int best = -1;
      for (int k = 0; k < n; ++k) {
        if (!in_iso[k] || lattice.class_of[k] >= q) continue;  // classes 1..q
        if (!lattice.subgroups[k].members.contains(lattice.subgroups[h].members))
          continue;
        best = std::max(best, sphere_dims[k]);
      }
      t.table[q][h] = best;
    }
  }

  for (int h = 0; h < n; ++h)
    if (t.table[r][h] != sphere_dims[h])
      throw NumericError(
          "filtration endpoint mismatch: the full filtration level must "
          "reproduce the sphere dimensions");
  return t;
}

}  // namespace equistab
