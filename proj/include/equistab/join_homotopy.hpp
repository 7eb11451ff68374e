#pragma once

#include <functional>
#include <vector>

namespace equistab {

// Executable forms of the join/suspension coordinate formulas. Everything
// here is plain coordinate arithmetic on sampled points; the verification
// suites drive these against each other.

// ---------------------------------------------------------------------------
// simplex coordinates

struct SimplexPoint {
  double t0 = 0, t1 = 0, t2 = 0;

  static constexpr double kEps = 1e-9;
  bool valid() const;
  /// Face i of the 2-simplex: coordinates with t_i = 0.
  bool on_face(int i) const;
  static double deviation(const SimplexPoint& a, const SimplexPoint& b);
};

/// s'(s,t) = s + t - st.
double s_prime(double s, double t);
/// t'(s,t) = t / (s + t - st), with t'(0,0) = 0; discontinuous at the
/// origin only.
double t_prime(double s, double t);

SimplexPoint alpha_tilde(double s, double t);
SimplexPoint beta_tilde(double s, double t);

/// Concatenated homotopy from alpha_tilde (p=0) to beta_tilde (p=1): the
/// first half runs H, the second half K, which agree at the seam. Arguments
/// within 1e-6 of (s,t) = (0,0) are outside the verified domain and
/// rejected.
SimplexPoint theta_tilde(double p, double s, double t);

// ---------------------------------------------------------------------------
// join points

/// A point [t1 x1, ..., tn xn] of an n-fold join; entry i belongs to
/// factor i. Entries with weight <= 1e-12 normalize away, matching the join
/// quotient's identification of brackets that differ only where t_i = 0.
struct JoinPoint {
  struct Entry {
    double weight = 0;
    std::vector<double> point;
  };
  std::vector<Entry> entries;

  static constexpr double kSumTol = 1e-9;
  static constexpr double kDropTol = 1e-12;

  int arity() const { return static_cast<int>(entries.size()); }
  void validate() const;
  JoinPoint normalized() const;
  /// Per-factor deviation max(|dw|, |w x - w' x'|_inf) after normalization.
  static double deviation(const JoinPoint& a, const JoinPoint& b);
};

JoinPoint make_join2(double s, std::vector<double> first,
                     std::vector<double> second);
JoinPoint make_join3(double w0, std::vector<double> p0, double w1,
                     std::vector<double> p1, double w2, std::vector<double> p2);

/// Removes a factor whose weight already vanished (within kDropTol).
JoinPoint drop_factor(const JoinPoint& p, int factor);

/// alpha(a, [sy, (1-s)z], t) = [st a, s(1-t) y, (1-s) z].
JoinPoint alpha_map(const std::vector<double>& a, const JoinPoint& yz,
                    double t);
/// beta(a, [sy, (1-s)z], t) = [t a, s(1-t) y, (1-s)(1-t) z]; this is the
/// quotient onto A(YZ) composed with the associativity homeomorphism.
JoinPoint beta_map(const std::vector<double>& a, const JoinPoint& yz,
                   double t);

using FlatMap = std::function<std::vector<double>(const std::vector<double>&)>;
using JoinValuedMap = std::function<JoinPoint(const std::vector<double>&)>;
using PairJoinValuedMap = std::function<JoinPoint(
    const std::vector<double>&, const std::vector<double>&)>;

/// J_Z(f)([s x, (1-s) z]) = [s f(x), (1-s) z] for a plain map f.
JoinPoint join_map(const FlatMap& f, const JoinPoint& xz);
/// Same with f valued in a 2-fold join; the result flattens to 3 factors.
JoinPoint join_map_flattened(const JoinValuedMap& f, const JoinPoint& xz);
/// psi(f)(a, [s x, (1-s) z]) = [s f(a,x), (1-s) z], flattened to 3 factors.
JoinPoint psi_map_flattened(const PairJoinValuedMap& f,
                            const std::vector<double>& a, const JoinPoint& xz);

// Associativity homeomorphisms between (XY)Z, X(YZ) and the flat triple
// join, in both directions.

struct NestedLeft {  // [s (xy), (1-s) z]
  double s = 0;
  JoinPoint xy;
  std::vector<double> z;
};
struct NestedRight {  // [t x, (1-t) (yz)]
  double t = 0;
  std::vector<double> x;
  JoinPoint yz;
};

JoinPoint assoc_left(const NestedLeft& p);
NestedLeft assoc_left_inverse(const JoinPoint& p);
JoinPoint assoc_right(const NestedRight& p);
NestedRight assoc_right_inverse(const JoinPoint& p);

// ---------------------------------------------------------------------------
// one-point compactifications and the suspension comparison

struct CompactifiedPoint {
  std::vector<double> v;
  bool infinite = false;

  static CompactifiedPoint inf();
  static CompactifiedPoint at(std::vector<double> coords);
  static double deviation(const CompactifiedPoint& a,
                          const CompactifiedPoint& b);
};

/// Coordinates split into a U-part and a V-part carrying the sum norm
/// |u + v| = |u| + |v| (each factor Euclidean); dim_v = 0 is a plain
/// Euclidean sphere model.
struct SumSpace {
  int dim_u = 0;
  int dim_v = 0;

  int dim() const { return dim_u + dim_v; }
  double norm(const std::vector<double>& w) const;
};

using SelfMap = std::function<CompactifiedPoint(const CompactifiedPoint&)>;

/// The fixed homeomorphism [0,1] -> [0,inf] used by the pinch map.
double phi(double x);

struct PinchPoint {
  int copy = 0;  // 0 or 1; copy 0 at infinity is the seam = copy 1 at 0
  CompactifiedPoint p;
};

PinchPoint pinch(const CompactifiedPoint& u, const SumSpace& space);

/// tau(f) = id + f and sigma(f) = inv + f along the pinch decomposition;
/// inv is radial inversion. tau carries basepoint class pi_B^A to id_B,
/// sigma the other way.
SelfMap tau(const SelfMap& f, const SumSpace& space);
SelfMap sigma(const SelfMap& f, const SumSpace& space);

/// f smashed with the V-sphere: u + v -> f(u) + v.
SelfMap smash_with_sphere(const SelfMap& f, const SumSpace& space);

/// The interpolating homotopy between (tau f) smash S^V at t = 0 and
/// tau(f smash S^V) at t = 1. Samples within 1e-9 of the branch seam
/// |u + t v| = 1 must be redrawn by the caller; (t, point) = (0, inf) is
/// rejected.
CompactifiedPoint h_homotopy(double t, const SelfMap& f,
                             const CompactifiedPoint& w, const SumSpace& space);

struct SuspensionPoint {
  double t = 0;
  std::vector<double> x;

  /// Endpoint classes alpha_0 (t=0) and alpha_1 (t=1) collapse x.
  static double deviation(const SuspensionPoint& a, const SuspensionPoint& b);
};

/// eta(x)(t) = (t, x) in the unreduced suspension.
SuspensionPoint eta(const std::vector<double>& x, double t);

}  // namespace equistab
