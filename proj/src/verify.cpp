#include "equistab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "equistab/errors.hpp"
#include "equistab/join_homotopy.hpp"

namespace equistab {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> random_vec(Rng& rng, int dim, double scale = 2.0) {
  std::vector<double> v(dim);
  for (double& x : v) x = uniform(rng, -scale, scale);
  return v;
}

struct Suite {
  VerifyRow row;
  explicit Suite(std::string name, double tol) {
    row.name = std::move(name);
    row.tolerance = tol;
  }
  void sample(double dev) {
    ++row.samples;
    row.max_deviation = std::max(row.max_deviation, dev);
  }
  VerifyRow done() {
    row.pass = row.max_deviation <= row.tolerance;
    return row;
  }
};

// fixed sample dimensions for the join diagrams
constexpr int kDimA = 2, kDimX = 2, kDimY = 3, kDimZ = 2;

struct LinearMap {
  std::vector<std::vector<double>> m;
  static LinearMap seeded(Rng& rng, int rows, int cols) {
    LinearMap l;
    l.m.assign(rows, std::vector<double>(cols));
    for (auto& r : l.m)
      for (double& x : r) x = uniform(rng, -1.0, 1.0);
    return l;
  }
  std::vector<double> operator()(const std::vector<double>& v) const {
    std::vector<double> out(m.size(), 0.0);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
  }
};

double sqnorm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

/// Quotient-safe map Y -> XY with weight depending smoothly on the point.
JoinValuedMap sample_join_valued(Rng& rng) {
  LinearMap L = LinearMap::seeded(rng, kDimX, kDimY);
  LinearMap M = LinearMap::seeded(rng, kDimY, kDimY);
  return [L, M](const std::vector<double>& y) {
    double c = 1.0 / (1.0 + sqnorm(y));
    return make_join2(c, L(y), M(y));
  };
}

/// Quotient-safe map A -> XY.
JoinValuedMap sample_a_to_xy(Rng& rng) {
  LinearMap L = LinearMap::seeded(rng, kDimX, kDimA);
  LinearMap M = LinearMap::seeded(rng, kDimY, kDimA);
  return [L, M](const std::vector<double>& a) {
    double c = 0.25 + 0.5 / (1.0 + sqnorm(a));
    return make_join2(c, L(a), M(a));
  };
}

/// Map AY -> XY defined on join points through the well-defined coordinates
/// (t, t*a, (1-t)*y) so that it descends to the join quotient.
std::function<JoinPoint(const JoinPoint&)> sample_ay_to_xy(Rng& rng) {
  LinearMap La = LinearMap::seeded(rng, kDimX, kDimA);
  LinearMap Ly = LinearMap::seeded(rng, kDimX, kDimY);
  LinearMap Ma = LinearMap::seeded(rng, kDimY, kDimA);
  LinearMap My = LinearMap::seeded(rng, kDimY, kDimY);
  return [La, Ly, Ma, My](const JoinPoint& ay) {
    double t = ay.entries[0].weight;
    std::vector<double> wa(kDimA), wy(kDimY);
    for (int i = 0; i < kDimA; ++i) wa[i] = t * ay.entries[0].point[i];
    for (int i = 0; i < kDimY; ++i)
      wy[i] = (1 - t) * ay.entries[1].point[i];
    std::vector<double> px = La(wa), qy = Ma(wa);
    std::vector<double> px2 = Ly(wy), qy2 = My(wy);
    for (int i = 0; i < kDimX; ++i) px[i] += px2[i];
    for (int i = 0; i < kDimY; ++i) qy[i] += qy2[i];
    return make_join2(t, px, qy);
  };
}

SimplexPoint alpha_tilde_hooked(double s, double t, bool corrupt) {
  SimplexPoint p = alpha_tilde(s, t);
  if (corrupt) p.t1 = -p.t1;
  return p;
}

// self-map libraries for the suspension suites

SelfMap radial_map(double (*psi)(double), std::vector<std::vector<double>> R) {
  return [psi, R](const CompactifiedPoint& u) {
    if (u.infinite) return CompactifiedPoint::inf();
    double r = std::sqrt(sqnorm(u.v));
    if (r == 0.0) return CompactifiedPoint::inf();
    double c = psi(r) / r;
    std::vector<double> out(u.v.size(), 0.0);
    for (size_t i = 0; i < R.size(); ++i)
      for (size_t j = 0; j < u.v.size(); ++j) out[i] += R[i][j] * u.v[j];
    for (double& x : out) x *= c;
    return CompactifiedPoint::at(std::move(out));
  };
}

double psi_pole(double r) { return r + 1.0 / r; }           // 0,inf -> inf
double psi_pole2(double r) { return r * r + 1.0 / (r * r); }
double psi_pole3(double r) { return r + 2.0 / r; }

/// Maps sending 0 -> inf and inf -> inf (the pi_B^A basepoint class).
std::vector<SelfMap> pole_maps() {
  double c = std::cos(0.7), s = std::sin(0.7);
  return {
      radial_map(psi_pole, {{c, -s}, {s, c}}),
      radial_map(psi_pole2, {{0, 1}, {1, 0}}),
      radial_map(psi_pole3, {{1, 0}, {0, -1}}),
  };
}

double psi_fix(double r) { return r; }
double psi_fix2(double r) { return r * r; }

/// Maps fixing 0 and inf (the id_B basepoint class).
std::vector<SelfMap> fixing_maps() {
  double c = std::cos(0.3), s = std::sin(0.3);
  return {
      radial_map(psi_fix, {{c, -s}, {s, c}}),
      radial_map(psi_fix2, {{0, 1}, {1, 0}}),
  };
}

}  // namespace

bool all_pass(const std::vector<VerifyRow>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerifyRow& r) { return r.pass; });
}

std::vector<VerifyRow> verify_join_identities(const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  Rng rng(opt.seed * 0x9e3779b97f4a7c15ull + 1);

  {
    Suite s("beta~ = alpha~ o (s',t')", 1e-9);
    for (int i = 0; i < 200; ++i) {
      double ss = uniform(rng), tt = uniform(rng);
      SimplexPoint lhs = beta_tilde(ss, tt);
      SimplexPoint rhs = alpha_tilde_hooked(s_prime(ss, tt), t_prime(ss, tt),
                                            opt.corrupt_alpha_tilde);
      s.sample(SimplexPoint::deviation(lhs, rhs));
    }
    rows.push_back(s.done());
  }

  {
    Suite s0("theta~(0) = alpha~", 1e-9);
    Suite s1("theta~(1) = beta~", 1e-9);
    for (int i = 0; i < 100; ++i) {
      double ss = uniform(rng), tt = uniform(rng);
      while (std::hypot(ss, tt) < 1e-6) ss = uniform(rng), tt = uniform(rng);
      s0.sample(SimplexPoint::deviation(theta_tilde(0, ss, tt),
                                        alpha_tilde(ss, tt)));
      s1.sample(SimplexPoint::deviation(theta_tilde(1, ss, tt),
                                        beta_tilde(ss, tt)));
    }
    rows.push_back(s0.done());
    rows.push_back(s1.done());
  }

  {
    Suite faces("theta~ face containments (20^3 grid)", 1e-9);
    Suite seam("theta~ seam H(1) = K(0)", 1e-9);
    const int n = 20;
    auto grid = [&](int i) { return static_cast<double>(i) / (n - 1); };
    for (int pi = 0; pi < n; ++pi) {
      for (int si = 0; si < n; ++si) {
        for (int ti = 0; ti < n; ++ti) {
          double p = grid(pi), ss = grid(si), tt = grid(ti);
          if (std::hypot(ss, tt) < 1e-6) continue;
          SimplexPoint x = theta_tilde(p, ss, tt);
          double dev = x.valid() ? 0.0 : 1.0;
          if (si == 0) dev = std::max(dev, std::max(0.0, x.t1));
          if (si == n - 1) dev = std::max(dev, std::max(0.0, x.t2));
          if (ti == 0) dev = std::max(dev, std::max(0.0, x.t0));
          if (ti == n - 1) dev = std::max(dev, std::max(0.0, x.t1));
          faces.sample(dev);
          if (pi == 0) {
            // H at its endpoint against the K formula at its start
            double tp = t_prime(ss, tt);
            SimplexPoint k0{ss * tp, ss * (1 - tp), 1 - ss};
            seam.sample(SimplexPoint::deviation(theta_tilde(0.5, ss, tt), k0));
          }
        }
      }
    }
    rows.push_back(faces.done());
    rows.push_back(seam.done());
  }

  {
    Suite a0("alpha at t=0 is incl o proj", 1e-9);
    Suite a1("alpha at t=1 lands in AZ", 1e-9);
    Suite b1("beta at t=1 is incl o proj_A", 1e-9);
    Suite bq("beta is the A(YZ) quotient", 1e-9);
    for (int i = 0; i < 100; ++i) {
      std::vector<double> a = random_vec(rng, kDimA);
      JoinPoint yz = make_join2(uniform(rng), random_vec(rng, kDimY),
                                random_vec(rng, kDimZ));
      double t = uniform(rng);

      JoinPoint at0 = alpha_map(a, yz, 0);
      a0.sample(JoinPoint::deviation(drop_factor(at0, 0), yz));

      JoinPoint at1 = alpha_map(a, yz, 1);
      double s = yz.entries[0].weight;
      JoinPoint az = make_join2(s, a, yz.entries[1].point);
      a1.sample(JoinPoint::deviation(drop_factor(at1, 1), az));

      JoinPoint bt1 = beta_map(a, yz, 1);
      b1.sample(JoinPoint::deviation(
          bt1, make_join3(1.0, a, 0.0, yz.entries[0].point, 0.0,
                          yz.entries[1].point)));

      NestedRight nested{t, a, yz};
      bq.sample(JoinPoint::deviation(beta_map(a, yz, t), assoc_right(nested)));
    }
    rows.push_back(a0.done());
    rows.push_back(a1.done());
    rows.push_back(b1.done());
    rows.push_back(bq.done());
  }

  {
    Suite idm("J_Z(identity) = identity", 1e-9);
    Suite restr("J_Z(f) restricted to X is incl o f", 1e-9);
    Suite pt("psi over a point is J_Z", 1e-9);
    FlatMap ident = [](const std::vector<double>& v) { return v; };
    LinearMap f = LinearMap::seeded(rng, kDimX, kDimX);
    FlatMap ff = [f](const std::vector<double>& v) { return f(v); };
    for (int i = 0; i < 100; ++i) {
      JoinPoint xz = make_join2(uniform(rng), random_vec(rng, kDimX),
                                random_vec(rng, kDimZ));
      idm.sample(JoinPoint::deviation(join_map(ident, xz), xz));

      JoinPoint at_x = make_join2(1.0, xz.entries[0].point,
                                  xz.entries[1].point);
      JoinPoint lhs = join_map(ff, at_x);
      JoinPoint rhs = make_join2(1.0, f(xz.entries[0].point),
                                 xz.entries[1].point);
      restr.sample(JoinPoint::deviation(lhs, rhs));

      // psi_{*,X,Y,Z} with a one-point A equals J_Z
      JoinValuedMap g = sample_join_valued(rng);
      PairJoinValuedMap g_pair =
          [g](const std::vector<double>&, const std::vector<double>& y) {
            return g(y);
          };
      JoinPoint yz = make_join2(uniform(rng), random_vec(rng, kDimY),
                                random_vec(rng, kDimZ));
      pt.sample(JoinPoint::deviation(psi_map_flattened(g_pair, {}, yz),
                                     join_map_flattened(g, yz)));
    }
    rows.push_back(idm.done());
    rows.push_back(restr.done());
    rows.push_back(pt.done());
  }

  {
    Suite d_full("diagram: alpha^* o J_Z = psi o pi^* (full rectangle)", 1e-6);
    Suite d_a0("diagram: (alpha|t=0)^* o J_Z = psi o pi^*", 1e-6);
    Suite d_a1("diagram: (alpha|t=1)^* o J_Z = psi o pi^*", 1e-6);
    Suite d_b1("diagram: (beta|t=1)^* o J_Z = pi^* o incl_*", 1e-6);
    for (int rep = 0; rep < 3; ++rep) {
      auto f_ay = sample_ay_to_xy(rng);
      JoinValuedMap f_y = sample_join_valued(rng);
      JoinValuedMap h_a = sample_a_to_xy(rng);
      for (int i = 0; i < 100; ++i) {
        std::vector<double> a = random_vec(rng, kDimA);
        double s = uniform(rng, 0.05, 0.95);
        JoinPoint yz = make_join2(s, random_vec(rng, kDimY),
                                  random_vec(rng, kDimZ));
        double t = uniform(rng);

        {  // full rectangle with f: AY -> XY
          NestedLeft n1 = assoc_left_inverse(alpha_map(a, yz, t));
          JoinPoint lhs = assoc_left({n1.s, f_ay(n1.xy), n1.z});
          JoinPoint ay = make_join2(t, a, yz.entries[0].point);
          JoinPoint rhs = assoc_left({s, f_ay(ay), yz.entries[1].point});
          d_full.sample(JoinPoint::deviation(lhs, rhs));
        }
        {  // t = 0 square with f: Y -> XY
          JoinPoint lhs = join_map_flattened(
              f_y, drop_factor(alpha_map(a, yz, 0), 0));
          PairJoinValuedMap pf =
              [&f_y](const std::vector<double>&, const std::vector<double>& y) {
                return f_y(y);
              };
          JoinPoint rhs = psi_map_flattened(pf, a, yz);
          d_a0.sample(JoinPoint::deviation(lhs, rhs));
        }
        {  // t = 1 square with h: A -> XY
          JoinPoint lhs = join_map_flattened(
              h_a, drop_factor(alpha_map(a, yz, 1), 1));
          PairJoinValuedMap ph =
              [&h_a](const std::vector<double>& aa, const std::vector<double>&) {
                return h_a(aa);
              };
          JoinPoint rhs = psi_map_flattened(ph, a, yz);
          d_a1.sample(JoinPoint::deviation(lhs, rhs));
        }
        {  // beta t = 1 triangle with h: A -> XY
          JoinPoint b = beta_map(a, yz, 1);
          JoinPoint az = drop_factor(b, 1);
          JoinPoint lhs = join_map_flattened(h_a, az);
          JoinPoint rhs = assoc_left({1.0, h_a(a), yz.entries[1].point});
          d_b1.sample(JoinPoint::deviation(lhs, rhs));
        }
      }
    }
    rows.push_back(d_full.done());
    rows.push_back(d_a0.done());
    rows.push_back(d_a1.done());
    rows.push_back(d_b1.done());
  }

  {
    Suite left("associativity (XY)Z <-> XYZ round trips", 1e-9);
    Suite right("associativity X(YZ) <-> XYZ round trips", 1e-9);
    for (int i = 0; i < 100; ++i) {
      double w0 = uniform(rng), w1 = uniform(rng), w2 = uniform(rng);
      double sum = w0 + w1 + w2;
      if (sum <= 0) continue;
      JoinPoint p = make_join3(w0 / sum, random_vec(rng, kDimX), w1 / sum,
                               random_vec(rng, kDimY), w2 / sum,
                               random_vec(rng, kDimZ));
      left.sample(JoinPoint::deviation(assoc_left(assoc_left_inverse(p)), p));
      right.sample(JoinPoint::deviation(assoc_right(assoc_right_inverse(p)), p));

      NestedLeft nl{uniform(rng, 0.05, 0.95),
                    make_join2(uniform(rng), random_vec(rng, kDimX),
                               random_vec(rng, kDimY)),
                    random_vec(rng, kDimZ)};
      NestedLeft back = assoc_left_inverse(assoc_left(nl));
      left.sample(std::abs(back.s - nl.s));
      left.sample(JoinPoint::deviation(back.xy, nl.xy));

      NestedRight nr{uniform(rng, 0.05, 0.95), random_vec(rng, kDimX),
                     make_join2(uniform(rng), random_vec(rng, kDimY),
                                random_vec(rng, kDimZ))};
      NestedRight rback = assoc_right_inverse(assoc_right(nr));
      right.sample(std::abs(rback.t - nr.t));
      right.sample(JoinPoint::deviation(rback.yz, nr.yz));
    }
    rows.push_back(left.done());
    rows.push_back(right.done());
  }

  {
    Suite s("join-point equality drops zero weights", 0.0);
    std::vector<double> x = {1.0, 2.0}, x2 = {-3.0, 5.0}, z = {0.5, -0.5};
    JoinPoint a = make_join2(0.0, x, z);
    JoinPoint b = make_join2(0.0, x2, z);
    s.sample(JoinPoint::deviation(a, b));
    JoinPoint c = make_join2(1.0, x, z);
    JoinPoint d = make_join2(1.0, x, {9.0, 9.0});
    s.sample(JoinPoint::deviation(c, d));
    JoinPoint e = make_join2(1e-13, x, z);
    s.sample(JoinPoint::deviation(e, b));
    // symmetry and reflexivity of the comparison
    s.sample(std::abs(JoinPoint::deviation(a, b) - JoinPoint::deviation(b, a)));
    s.sample(JoinPoint::deviation(a, a));
    rows.push_back(s.done());
  }

  return rows;
}

std::vector<VerifyRow> verify_suspension_identities(const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  Rng rng(opt.seed * 0x9e3779b97f4a7c15ull + 2);

  {
    Suite s("eta endpoints collapse to alpha_0, alpha_1", 0.0);
    for (int i = 0; i < 50; ++i) {
      std::vector<double> x = random_vec(rng, 3), y = random_vec(rng, 3);
      s.sample(SuspensionPoint::deviation(eta(x, 0), eta(y, 0)));
      s.sample(SuspensionPoint::deviation(eta(x, 1), eta(y, 1)));
      double t = uniform(rng);
      s.sample(SuspensionPoint::deviation(eta(x, t), SuspensionPoint{t, x}));
    }
    rows.push_back(s.done());
  }

  const SumSpace su{2, 0};    // S^U, Euclidean
  const SumSpace suv{2, 2};   // S^{U+V} with the sum norm

  {
    Suite s("tau f fixes 0 and inf; sigma f sends both to inf", 0.0);
    CompactifiedPoint zero = CompactifiedPoint::at({0.0, 0.0});
    for (const SelfMap& f : pole_maps()) {
      SelfMap tf = tau(f, su);
      s.sample(CompactifiedPoint::deviation(tf(zero), zero));
      s.sample(CompactifiedPoint::deviation(tf(CompactifiedPoint::inf()),
                                            CompactifiedPoint::inf()));
    }
    for (const SelfMap& g : fixing_maps()) {
      SelfMap sg = sigma(g, su);
      s.sample(CompactifiedPoint::deviation(sg(zero), CompactifiedPoint::inf()));
      s.sample(CompactifiedPoint::deviation(sg(CompactifiedPoint::inf()),
                                            CompactifiedPoint::inf()));
    }
    rows.push_back(s.done());
  }

  {
    Suite h0("h(0,f,.) = (tau f) smash S^V", 1e-6);
    Suite h1("h(1,f,.) = tau(f smash S^V)", 1e-6);
    for (const SelfMap& f : pole_maps()) {
      SelfMap lhs0 = smash_with_sphere(tau(f, su), suv);
      SelfMap rhs1 = tau(smash_with_sphere(f, suv), suv);
      for (int i = 0; i < 100; ++i) {
        std::vector<double> w = random_vec(rng, 4, 1.5);
        double ru = std::hypot(w[0], w[1]);
        double rv = std::hypot(w[2], w[3]);
        if (std::abs(ru - 1.0) < 1e-9 || std::abs(ru + rv - 1.0) < 1e-9) {
          --i;  // redraw near the branch seams
          continue;
        }
        CompactifiedPoint p = CompactifiedPoint::at(w);
        h0.sample(CompactifiedPoint::deviation(h_homotopy(0, f, p, suv),
                                               lhs0(p)));
        h1.sample(CompactifiedPoint::deviation(h_homotopy(1, f, p, suv),
                                               rhs1(p)));
      }
      h1.sample(CompactifiedPoint::deviation(
          h_homotopy(1, f, CompactifiedPoint::inf(), suv),
          CompactifiedPoint::inf()));
    }
    rows.push_back(h0.done());
    rows.push_back(h1.done());
  }

  return rows;
}

std::vector<VerifyRow> verify_group_properties(const PermGroup& G,
                                               const SubgroupLattice& lattice,
                                               const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  Rng rng(opt.seed * 0x9e3779b97f4a7c15ull + 3);
  std::uniform_int_distribution<int> pick(0, G.order() - 1);

  {
    Suite s("closure: random products stay in the group", 0.0);
    for (int i = 0; i < 200; ++i) {
      int a = pick(rng), b = pick(rng);
      Perm p = compose(G.element(a), G.element(b));
      s.sample(G.element(G.mult(a, b)) == p ? 0.0 : 1.0);
    }
    rows.push_back(s.done());
  }
  {
    Suite s("Lagrange: subgroup orders divide the group order", 0.0);
    for (const Subgroup& h : lattice.subgroups)
      s.sample(G.order() % h.order == 0 ? 0.0 : 1.0);
    rows.push_back(s.done());
  }
  {
    Suite s("conjugation stability of subgroup classes", 0.0);
    for (const auto& cls : lattice.classes) {
      for (int m : cls.member_indices) {
        for (int g = 0; g < G.order(); ++g) {
          int idx = lattice.index_of(
              conjugate_subgroup(G, lattice.subgroups[m], g).members);
          s.sample(idx >= 0 && lattice.class_of[idx] ==
                                   lattice.class_of[m]
                       ? 0.0
                       : 1.0);
        }
      }
    }
    rows.push_back(s.done());
  }
  {
    Suite s("class enumeration has non-increasing order", 0.0);
    for (size_t i = 0; i + 1 < lattice.classes.size(); ++i)
      s.sample(lattice.classes[i].class_order >=
                       lattice.classes[i + 1].class_order
                   ? 0.0
                   : 1.0);
    rows.push_back(s.done());
  }
  {
    Suite s("weyl coset tables are associative groups (|WH| <= 48)", 0.0);
    for (const Subgroup& h : lattice.subgroups) {
      QuotientGroup w = weyl_group(G, h);
      int m = w.order();
      if (m > 48) continue;
      for (int a = 0; a < m; ++a) {
        bool inv_found = false;
        for (int b = 0; b < m; ++b) {
          for (int c = 0; c < m; ++c)
            s.sample(w.table[w.table[a][b]][c] == w.table[a][w.table[b][c]]
                         ? 0.0
                         : 1.0);
          if (w.table[a][b] == 0 && w.table[b][a] == 0) inv_found = true;
        }
        s.sample(inv_found ? 0.0 : 1.0);
      }
    }
    rows.push_back(s.done());
  }
  return rows;
}

std::vector<VerifyRow> verify_universe_properties(const Universe& u,
                                                  const VerifyOptions& opt) {
  (void)opt;
  std::vector<VerifyRow> rows;
  const SubgroupLattice& lat = u.lattice();
  const PermGroup& G = *lat.group;

  {
    Suite integ("character averages are integral", 1e-6);
    Suite idem("averaging projectors are idempotent", 1e-7);
    for (const Representation& b : u.blocks()) {
      for (const Subgroup& h : lat.subgroups) {
        double avg = 0;
        for (int x : h.members.indices()) avg += b.character(x);
        avg /= h.order;
        integ.sample(std::abs(avg - std::round(avg)));
        if (b.dim() == 0) continue;
        Eigen::MatrixXd p = Eigen::MatrixXd::Zero(b.dim(), b.dim());
        for (int x : h.members.indices()) p += b.matrix(x);
        p /= h.order;
        idem.sample((p * p - p).cwiseAbs().maxCoeff());
      }
    }
    rows.push_back(integ.done());
    rows.push_back(idem.done());
  }

  {
    Suite mono("fixed dims decrease along subgroup inclusion", 0.0);
    Suite conj("fixed dims are conjugation invariant", 0.0);
    for (int b = 0; b < u.num_blocks(); ++b) {
      const FixedDimTable& t = u.block_dims(b);
      for (int i = 0; i < lat.num_subgroups(); ++i)
        for (int j = 0; j < lat.num_subgroups(); ++j)
          if (lat.subgroups[j].members.contains(lat.subgroups[i].members))
            mono.sample(t.at(i) >= t.at(j) ? 0.0 : 1.0);
      for (const auto& cls : lat.classes) {
        int rep = lat.index_of(cls.representative.members);
        for (int m : cls.member_indices)
          conj.sample(t.at(m) == t.at(rep) ? 0.0 : 1.0);
      }
    }
    rows.push_back(mono.done());
    rows.push_back(conj.done());
  }

  {
    Suite add("fixed dims are additive over direct sums", 0.0);
    Suite dual("join isotropy equals direct-sum sphere isotropy", 0.0);
    for (int i = 0; i < u.num_blocks(); ++i) {
      for (int j = 0; j <= i; ++j) {
        Representation sum =
            Representation::direct_sum(u.blocks()[i], u.blocks()[j]);
        FixedDimTable st = fixed_dim_table(sum, lat);
        for (int h = 0; h < lat.num_subgroups(); ++h)
          add.sample(st.at(h) == u.block_dims(i).at(h) + u.block_dims(j).at(h)
                         ? 0.0
                         : 1.0);
        auto folded = join_isotropy(lat, u.block_isotropy(i), u.block_isotropy(j));
        auto direct = isotropy_from_fixed_dims(st.dims, lat);
        dual.sample(folded == direct ? 0.0 : 1.0);
      }
    }
    rows.push_back(add.done());
    rows.push_back(dual.done());
  }

  {
    Suite filt("filtration endpoint/monotonicity/level identities", 0.0);
    int upto = std::min(3, 2 * u.num_blocks());
    for (int n = 1; n <= upto; ++n) {
      std::vector<int> sd(lat.num_subgroups());
      std::vector<int> fd(lat.num_subgroups());
      for (int h = 0; h < lat.num_subgroups(); ++h) {
        fd[h] = u.range_fixed_dim(1, n, h);
        sd[h] = fd[h] - 1;
      }
      FiltrationTable t = filtration_dims(sd, lat);
      std::vector<int> iso = isotropy_from_fixed_dims(fd, lat);
      const int r = lat.num_classes();
      for (int h = 0; h < lat.num_subgroups(); ++h) {
        filt.sample(t.at(0, h) == -1 ? 0.0 : 1.0);
        filt.sample(t.at(r, h) == sd[h] ? 0.0 : 1.0);
        for (int q = 1; q <= r; ++q)
          filt.sample(t.at(q, h) >= t.at(q - 1, h) ? 0.0 : 1.0);
      }
      for (int q = 1; q <= r; ++q) {
        int rep = lat.index_of(lat.classes[q - 1].representative.members);
        if (std::find(iso.begin(), iso.end(), rep) == iso.end()) continue;
        filt.sample(t.at(q, rep) == sd[rep] ? 0.0 : 1.0);
        int best = -1;
        for (int k = 0; k < lat.num_subgroups(); ++k)
          if (k != rep && lat.subgroups[k].members.contains(
                              lat.subgroups[rep].members))
            best = std::max(best, sd[k]);
        filt.sample(t.at(q - 1, rep) == best ? 0.0 : 1.0);
      }
    }
    rows.push_back(filt.done());
  }

  {
    Suite cert("far-in-U certificates are monotone in n at k=0", 0.0);
    try {
      StabilityCertificate c = stable_range(u, 0, Profile::FarInU);
      cert.sample(c.pass ? 0.0 : 1.0);
      cert.sample(check_far_in_u(u, 1, c.n + 1, 0).pass ? 0.0 : 1.0);
      cert.sample(check_far_in_u(u, 1, c.n + 2, 0).pass ? 0.0 : 1.0);
    } catch (const SearchLimitError&) {
      cert.sample(1.0);
    }
    rows.push_back(cert.done());
  }

  return rows;
}

}  // namespace equistab
