#include "equistab/limit_groups.hpp"

#include <cmath>

#include "equistab/errors.hpp"

namespace equistab {

FgAbelianGroup omega0() { return FgAbelianGroup::free(1); }

FgAbelianGroup omega1(const FgAbelianGroup& weyl_abelianization) {
  return FgAbelianGroup::direct_sum(FgAbelianGroup::cyclic(2),
                                    weyl_abelianization);
}

SplittingReport unpointed_limit_groups(const PermGroup& G,
                                       const IsotropyFamily& family) {
  const SubgroupLattice& lat = *family.lattice;
  SplittingReport r;
  for (int cls : family.class_indices) {
    const SubgroupConjClass& c = lat.classes[cls];
    ClassSummand s;
    s.lattice_class = cls;
    s.label = class_label(lat, cls);
    s.subgroup_order = c.class_order;
    s.class_size = static_cast<int>(c.member_indices.size());
    QuotientGroup w = weyl_group(G, c.representative);
    s.weyl_order = w.order();
    s.weyl_abelianization = abelianization(w);
    s.omega0 = omega0();
    s.omega1 = omega1(s.weyl_abelianization);
    r.classes.push_back(std::move(s));
  }
  for (const ClassSummand& s : r.classes) {
    r.pi0 = FgAbelianGroup::direct_sum(r.pi0, s.omega0);
    r.pi1 = FgAbelianGroup::direct_sum(r.pi1, s.omega1);
    r.symbolic_tail.push_back("ω_i(BW(" + s.label + ")), i >= 2");
  }
  return r;
}

SplittingReport pointed_limit_groups(const PermGroup& G,
                                     const IsotropyFamily& family,
                                     bool trivial_block_present) {
  SplittingReport r = unpointed_limit_groups(G, family);
  r.pointed = true;
  if (trivial_block_present) return r;
  r.doubled = true;
  r.pi0 = FgAbelianGroup::direct_sum(r.pi0, r.pi0);
  r.pi1 = FgAbelianGroup::direct_sum(r.pi1, r.pi1);
  std::vector<std::string> tail;
  for (const ClassSummand& s : r.classes)
    tail.push_back("ω_i(BW(" + s.label + ") ⊔ BW(" + s.label +
                   ")), i >= 2");
  r.symbolic_tail = std::move(tail);
  return r;
}

BurnsideCrossCheck burnside_cross_check(const Universe& u) {
  const SubgroupLattice& lat = u.lattice();
  BurnsideCrossCheck c;
  c.burnside_rank = lat.num_classes();
  c.family_rank = u.family().num_classes();

  bool has_regular = false;
  const PermGroup& G = *lat.group;
  for (const Representation& b : u.blocks()) {
    bool regular_char = std::abs(b.character(0) - G.order()) < 1e-6;
    for (int e = 1; e < G.order() && regular_char; ++e)
      if (std::abs(b.character(e)) >= 1e-6) regular_char = false;
    if (regular_char) has_regular = true;
  }
  if (!has_regular) {
    c.status = BurnsideCrossCheck::Status::NotApplicable;
    c.detail = "not applicable: no block carries the regular character";
    return c;
  }

  for (int cls = 0; cls < lat.num_classes(); ++cls) {
    bool in_family = false;
    for (int f : u.family().class_indices)
      if (f == cls) in_family = true;
    if (!in_family) c.missing_classes.push_back(class_label(lat, cls));
  }
  if (c.missing_classes.empty() && c.family_rank == c.burnside_rank) {
    c.status = BurnsideCrossCheck::Status::Pass;
    c.detail = "family classes = all subgroup classes; rank " +
               std::to_string(c.burnside_rank);
  } else {
    c.status = BurnsideCrossCheck::Status::Fail;
    c.detail = "family misses " +
               std::to_string(c.missing_classes.size()) +
               " subgroup classes of the Burnside ring basis";
  }
  return c;
}

}  // namespace equistab
