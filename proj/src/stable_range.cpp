#include "equistab/stable_range.hpp"

#include <algorithm>
#include <set>

#include "equistab/errors.hpp"

namespace equistab {

Universe::Universe(const SubgroupLattice& lattice,
                   std::vector<Representation> blocks)
    : lattice_(&lattice), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ParseError("universe needs at least one block");
  std::vector<std::vector<int>> seeds;
  for (const Representation& b : blocks_) {
    if (b.dim() < 1)
      throw ParseError("universe blocks must have dimension >= 1");
    block_dims_.push_back(fixed_dim_table(b, lattice));
    block_iso_.push_back(isotropy_from_fixed_dims(block_dims_.back().dims, lattice));
    seeds.push_back(block_iso_.back());
    if (b.contains_trivial_summand()) has_trivial_block_ = true;
  }
  family_ = family_closure(lattice, seeds);
}

int Universe::range_fixed_dim(int m, int n, int subgroup_index) const {
  int total = 0;
  for (int i = m; i <= n; ++i)
    total += block_dims_[block_at(i)].at(subgroup_index);
  return total;
}

std::vector<int> Universe::range_isotropy(int m, int n) const {
  std::vector<int> iso = block_iso_[block_at(m)];
  for (int i = m + 1; i <= n; ++i)
    iso = join_isotropy(*lattice_, iso, block_iso_[block_at(i)]);
  return iso;
}

std::string profile_name(Profile p) {
  switch (p) {
    case Profile::FarInU:
      return "far-in-U";
    case Profile::Theorem1Stabilization:
      return "theorem1-stabilization";
    case Profile::Theorem1Limit:
      return "theorem1-limit";
    case Profile::Suspension:
      return "suspension";
    case Profile::Prop61:
      return "prop61";
  }
  return "?";
}

std::optional<Profile> profile_from_name(const std::string& name) {
  for (Profile p :
       {Profile::FarInU, Profile::Theorem1Stabilization, Profile::Theorem1Limit,
        Profile::Suspension, Profile::Prop61})
    if (profile_name(p) == name) return p;
  return std::nullopt;
}

std::string class_label(const SubgroupLattice& lattice, int class_index) {
  return "H" + std::to_string(class_index + 1) + "(order " +
         std::to_string(lattice.classes[class_index].class_order) + ")";
}

namespace {

std::vector<int> classes_of(const SubgroupLattice& lat,
                            const std::vector<int>& subgroup_indices) {
  std::set<int> cs;
  for (int i : subgroup_indices) cs.insert(lat.class_of[i]);
  return {cs.begin(), cs.end()};
}

IsoCheck compare_isotropy(const SubgroupLattice& lat, const std::string& name,
                          const std::vector<int>& got,
                          const std::vector<int>& want) {
  IsoCheck c;
  c.name = name;
  std::set<int> got_cls, want_cls;
  for (int i : got) got_cls.insert(lat.class_of[i]);
  for (int i : want) want_cls.insert(lat.class_of[i]);
  for (int w : want_cls)
    if (!got_cls.count(w)) c.missing.push_back(class_label(lat, w));
  for (int g : got_cls)
    if (!want_cls.count(g)) c.extra.push_back(class_label(lat, g));
  // both sides are conjugation closed, so class comparison decides equality
  c.equal = c.missing.empty() && c.extra.empty() &&
            std::set<int>(got.begin(), got.end()) ==
                std::set<int>(want.begin(), want.end());
  return c;
}

Inequality make_check(std::string name, long long lhs, long long rhs,
                      bool strict = false) {
  Inequality q;
  q.name = std::move(name);
  q.lhs = lhs;
  q.rhs = rhs;
  q.strict = strict;
  q.ok = strict ? lhs > rhs : lhs >= rhs;
  return q;
}

/// Largest dim X^K over K strictly above H; -1 when H is the whole group.
/// Monotonicity lets us look at minimal overgroups only.
int max_over_dim(const SubgroupLattice& lat, const std::vector<int>& sphere_dims,
                 int h) {
  int best = -1;
  for (int j : lat.minimal_overgroups[h])
    best = std::max(best, sphere_dims[j]);
  return best;
}

void finalize(StabilityCertificate& c) {
  c.pass = true;
  for (const IsoCheck& ic : c.iso_checks)
    if (!ic.equal) c.pass = false;
  for (const ClassWitness& w : c.witnesses)
    for (const Inequality& q : w.checks)
      if (!q.ok) c.pass = false;
}

std::vector<int> range_sphere_dims(const Universe& u, int m, int n) {
  const SubgroupLattice& lat = u.lattice();
  std::vector<int> sd(lat.num_subgroups());
  for (int i = 0; i < lat.num_subgroups(); ++i)
    sd[i] = u.range_fixed_dim(m, n, i) - 1;
  return sd;
}

std::string describe_failure(const StabilityCertificate& c) {
  for (const IsoCheck& ic : c.iso_checks)
    if (!ic.equal) {
      std::string s = ic.name + " differs";
      if (!ic.missing.empty()) s += "; missing " + ic.missing.front();
      if (!ic.extra.empty()) s += "; extra " + ic.extra.front();
      return s;
    }
  for (const ClassWitness& w : c.witnesses)
    for (const Inequality& q : w.checks)
      if (!q.ok)
        return q.name + " at " + w.label + ": " + std::to_string(q.lhs) +
               (q.strict ? " > " : " >= ") + std::to_string(q.rhs) + " fails";
  return "no failing witness";
}

}  // namespace

StabilityCertificate check_far_in_u(const Universe& u, int m, int n, int k) {
  if (m < 1 || n < m) throw ParseError("need 1 <= m <= n");
  const SubgroupLattice& lat = u.lattice();
  StabilityCertificate c;
  c.profile = profile_name(Profile::FarInU);
  c.k = k;
  c.m = m;
  c.n = n;

  c.iso_checks.push_back(compare_isotropy(
      lat, "Iso(S(U_{m..n})) = F(U)", u.range_isotropy(m, n), u.family().members));

  std::vector<int> sd = range_sphere_dims(u, m, n);
  for (int cls : u.family().class_indices) {
    int rep = lat.index_of(lat.classes[cls].representative.members);
    ClassWitness w;
    w.lattice_class = cls;
    w.label = class_label(lat, cls);
    w.checks.push_back(make_check("dim X^H >= k", sd[rep], k));
    w.checks.push_back(make_check("dim X^H - max_{K>H} dim X^K >= k",
                                  sd[rep] - max_over_dim(lat, sd, rep), k));
    c.witnesses.push_back(std::move(w));
  }
  finalize(c);
  return c;
}

namespace {

/// X-side conditions for the stabilization profile at X = S(U_{<=m}).
StabilityCertificate stabilization_x_part(const Universe& u, int m, int k) {
  const SubgroupLattice& lat = u.lattice();
  StabilityCertificate c;
  c.iso_checks.push_back(compare_isotropy(lat, "Iso(X) = F(U)",
                                          u.range_isotropy(1, m),
                                          u.family().members));
  std::vector<int> sd = range_sphere_dims(u, 1, m);
  for (int cls : u.family().class_indices) {
    int rep = lat.index_of(lat.classes[cls].representative.members);
    ClassWitness w;
    w.lattice_class = cls;
    w.label = class_label(lat, cls);
    w.checks.push_back(make_check("dim X^H - max_{K>H} dim X^K >= k+1",
                                  sd[rep] - max_over_dim(lat, sd, rep), k + 1));
    c.witnesses.push_back(std::move(w));
  }
  finalize(c);
  return c;
}

StabilityCertificate stabilization_y_part(const Universe& u, int m, int n0,
                                          int k) {
  const SubgroupLattice& lat = u.lattice();
  StabilityCertificate c;
  c.iso_checks.push_back(compare_isotropy(lat, "Iso(Y') = F(U)",
                                          u.range_isotropy(m + 1, n0),
                                          u.family().members));
  std::vector<int> sd = range_sphere_dims(u, m + 1, n0);
  for (int cls : u.family().class_indices) {
    int rep = lat.index_of(lat.classes[cls].representative.members);
    ClassWitness w;
    w.lattice_class = cls;
    w.label = class_label(lat, cls);
    w.checks.push_back(make_check("dim Y'^H >= k+1", sd[rep], k + 1));
    c.witnesses.push_back(std::move(w));
  }
  finalize(c);
  return c;
}

StabilityCertificate merge(StabilityCertificate a,
                           const StabilityCertificate& b) {
  for (const IsoCheck& ic : b.iso_checks) a.iso_checks.push_back(ic);
  for (const ClassWitness& w : b.witnesses) {
    auto it = std::find_if(a.witnesses.begin(), a.witnesses.end(),
                           [&](const ClassWitness& aw) {
                             return aw.lattice_class == w.lattice_class;
                           });
    if (it == a.witnesses.end()) {
      a.witnesses.push_back(w);
    } else {
      it->checks.insert(it->checks.end(), w.checks.begin(), w.checks.end());
    }
  }
  finalize(a);
  return a;
}

/// Single-index profiles: the conditions evaluated on X = S(U_{<=n}).
StabilityCertificate single_range_profile(const Universe& u, int n, int k,
                                          Profile profile) {
  const SubgroupLattice& lat = u.lattice();
  StabilityCertificate c;
  c.profile = profile_name(profile);
  c.k = k;
  c.m = 1;
  c.n = n;
  c.iso_checks.push_back(compare_isotropy(lat, "Iso(X) = F(U)",
                                          u.range_isotropy(1, n),
                                          u.family().members));
  std::vector<int> sd = range_sphere_dims(u, 1, n);
  for (int cls : u.family().class_indices) {
    int rep = lat.index_of(lat.classes[cls].representative.members);
    ClassWitness w;
    w.lattice_class = cls;
    w.label = class_label(lat, cls);
    w.checks.push_back(make_check("dim X^H >= k+2", sd[rep], k + 2));
    if (profile == Profile::Theorem1Limit)
      w.checks.push_back(make_check("dim X^H - max_{K>H} dim X^K >= k+2",
                                    sd[rep] - max_over_dim(lat, sd, rep),
                                    k + 2));
    c.witnesses.push_back(std::move(w));
  }
  finalize(c);
  return c;
}

}  // namespace

StabilityCertificate check_profile_at(const Universe& u, int k,
                                      Profile profile, int m, int n) {
  switch (profile) {
    case Profile::FarInU:
      return check_far_in_u(u, m, n, k);
    case Profile::Theorem1Limit:
    case Profile::Suspension:
      return single_range_profile(u, n, k, profile);
    case Profile::Theorem1Stabilization: {
      StabilityCertificate c = stabilization_x_part(u, m, k);
      if (n > m) c = merge(std::move(c), stabilization_y_part(u, m, n, k));
      c.profile = profile_name(profile);
      c.k = k;
      c.m = m;
      c.n = n;
      if (n <= m) c.pass = false;  // Y' is empty
      return c;
    }
    case Profile::Prop61:
      throw ParseError(
          "prop61 is checked via check_prop61_hypotheses, not searched");
  }
  throw InternalError("unknown profile");
}

StabilityCertificate stable_range(const Universe& u, int k, Profile profile,
                                  int horizon) {
  if (k < 0) throw ParseError("k must be nonnegative");
  if (horizon < 1) throw ParseError("horizon must be positive");

  StabilityCertificate last;
  switch (profile) {
    case Profile::FarInU:
    case Profile::Theorem1Limit:
    case Profile::Suspension: {
      for (int n = 1; n <= horizon; ++n) {
        last = check_profile_at(u, k, profile, 1, n);
        if (last.pass) return last;
      }
      break;
    }
    case Profile::Theorem1Stabilization: {
      for (int m = 1; m <= horizon; ++m) {
        StabilityCertificate xc = stabilization_x_part(u, m, k);
        xc.profile = profile_name(profile);
        xc.k = k;
        xc.m = m;
        xc.n = m;
        last = xc;
        if (!xc.pass) continue;
        for (int n0 = m + 1; n0 <= horizon; ++n0) {
          last = check_profile_at(u, k, profile, m, n0);
          if (last.pass) return last;
        }
        break;  // larger m only shrinks Y' within the horizon
      }
      break;
    }
    case Profile::Prop61:
      throw ParseError(
          "prop61 is checked via check_prop61_hypotheses, not searched");
  }
  throw SearchLimitError("stable_range(" + profile_name(profile) +
                         ", k=" + std::to_string(k) + ") exhausted horizon " +
                         std::to_string(horizon) + "; last failing witness: " +
                         describe_failure(last));
}

namespace {

/// conn S^m: spheres of dimension >= 1 are (m-1)-connected; S^0 and the
/// empty sphere are not path connected.
int sphere_conn(int dim) { return dim >= 1 ? dim - 1 : -1; }

}  // namespace

StabilityCertificate check_prop61_hypotheses(const SubgroupLattice& lattice,
                                             const Representation& VX,
                                             const Representation& VY,
                                             const Representation& VZ, int k) {
  StabilityCertificate c;
  c.profile = profile_name(Profile::Prop61);
  c.k = k;

  FixedDimTable fx = fixed_dim_table(VX, lattice);
  FixedDimTable fy = fixed_dim_table(VY, lattice);
  FixedDimTable fz = fixed_dim_table(VZ, lattice);
  const int n = lattice.num_subgroups();
  std::vector<int> sx(n), sy(n), syz(n), sxy(n), sxyz(n);
  for (int i = 0; i < n; ++i) {
    sx[i] = fx.at(i) - 1;
    sy[i] = fy.at(i) - 1;
    syz[i] = fy.at(i) + fz.at(i) - 1;
    sxy[i] = fx.at(i) + fy.at(i) - 1;
    sxyz[i] = fx.at(i) + fy.at(i) + fz.at(i) - 1;
  }

  std::vector<int> iso_x = isotropy_from_fixed_dims(fx.dims, lattice);
  std::vector<int> iso_y = isotropy_from_fixed_dims(fy.dims, lattice);
  std::vector<int> iso_z = isotropy_from_fixed_dims(fz.dims, lattice);
  std::vector<int> iso_xyz =
      join_isotropy(lattice, join_isotropy(lattice, iso_x, iso_y), iso_z);

  c.iso_checks.push_back(
      compare_isotropy(lattice, "Iso(Y) = Iso(X)", iso_y, iso_x));
  c.iso_checks.push_back(
      compare_isotropy(lattice, "Iso(XYZ) = Iso(X)", iso_xyz, iso_x));

  for (int cls : classes_of(lattice, iso_x)) {
    int rep = lattice.index_of(lattice.classes[cls].representative.members);
    ClassWitness w;
    w.lattice_class = cls;
    w.label = class_label(lattice, cls);
    w.checks.push_back(make_check("dim Y^H > k", sy[rep], k, /*strict=*/true));
    w.checks.push_back(make_check("dim X^H - max_{K>H} dim X^K > k",
                                  sx[rep] - max_over_dim(lattice, sx, rep), k,
                                  /*strict=*/true));
    w.checks.push_back(make_check("conn (XY)^H >= dim X^H + dim Y^H",
                                  sphere_conn(sxy[rep]), sx[rep] + sy[rep]));
    w.checks.push_back(make_check("conn (XYZ)^H >= dim X^H + dim (YZ)^H",
                                  sphere_conn(sxyz[rep]), sx[rep] + syz[rep]));
    w.checks.push_back(make_check(
        "dim X^H + dim Y^H >= dim X^H + k + 1 (Freudenthal range for J_Z)",
        sx[rep] + sy[rep], sx[rep] + k + 1));
    c.witnesses.push_back(std::move(w));
  }
  finalize(c);
  return c;
}

}  // namespace equistab
