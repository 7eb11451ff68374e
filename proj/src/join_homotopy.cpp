#include "equistab/join_homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace equistab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(name) + " must lie in [0,1]");
}

std::vector<double> scaled(const std::vector<double>& v, double c) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

double euclid(const std::vector<double>& v, size_t lo, size_t hi) {
  double s = 0;
  for (size_t i = lo; i < hi; ++i) s += v[i] * v[i];
  return std::sqrt(s);
}

}  // namespace

// ---------------------------------------------------------------------------

bool SimplexPoint::valid() const {
  auto in_range = [](double t) { return t >= -kEps && t <= 1 + kEps; };
  return in_range(t0) && in_range(t1) && in_range(t2) &&
         std::abs(t0 + t1 + t2 - 1.0) <= kEps;
}

bool SimplexPoint::on_face(int i) const {
  double t = i == 0 ? t0 : (i == 1 ? t1 : t2);
  return t <= kEps;
}

double SimplexPoint::deviation(const SimplexPoint& a, const SimplexPoint& b) {
  return std::max({std::abs(a.t0 - b.t0), std::abs(a.t1 - b.t1),
                   std::abs(a.t2 - b.t2)});
}

double s_prime(double s, double t) {
  check_unit(s, "s");
  check_unit(t, "t");
  return s + t - s * t;
}

double t_prime(double s, double t) {
  check_unit(s, "s");
  check_unit(t, "t");
  if (s == 0.0 && t == 0.0) return 0.0;
  return t / (s + t - s * t);
}

SimplexPoint alpha_tilde(double s, double t) {
  check_unit(s, "s");
  check_unit(t, "t");
  return {s * t, s * (1 - t), 1 - s};
}

SimplexPoint beta_tilde(double s, double t) {
  check_unit(s, "s");
  check_unit(t, "t");
  return {t, s * (1 - t), (1 - s) * (1 - t)};
}

SimplexPoint theta_tilde(double p, double s, double t) {
  check_unit(p, "p");
  check_unit(s, "s");
  check_unit(t, "t");
  if (std::hypot(s, t) < 1e-6)
    throw std::domain_error(
        "theta_tilde is not verified near (s,t) = (0,0)");
  double tp = t_prime(s, t);
  if (p <= 0.5) {
    double q = 2 * p;
    double T = q * tp + (1 - q) * t;
    return {s * T, s * (1 - T), 1 - s};
  }
  double q = 2 * p - 1;
  double S = q * s_prime(s, t) + (1 - q) * s;
  return {S * tp, S * (1 - tp), 1 - S};
}

// ---------------------------------------------------------------------------

void JoinPoint::validate() const {
  double sum = 0;
  for (const Entry& e : entries) {
    if (!(e.weight >= -kSumTol && e.weight <= 1 + kSumTol))
      throw std::domain_error("join weight out of [0,1]");
    sum += e.weight;
  }
  if (std::abs(sum - 1.0) > kSumTol)
    throw std::domain_error("join weights must sum to 1");
}

JoinPoint JoinPoint::normalized() const {
  JoinPoint out = *this;
  for (Entry& e : out.entries) {
    if (e.weight <= kDropTol) {
      e.weight = 0;
      std::fill(e.point.begin(), e.point.end(), 0.0);
    }
  }
  return out;
}

double JoinPoint::deviation(const JoinPoint& a, const JoinPoint& b) {
  if (a.arity() != b.arity()) return kInf;
  JoinPoint x = a.normalized(), y = b.normalized();
  double dev = 0;
  for (int i = 0; i < x.arity(); ++i) {
    const Entry& e = x.entries[i];
    const Entry& f = y.entries[i];
    if (e.point.size() != f.point.size()) return kInf;
    dev = std::max(dev, std::abs(e.weight - f.weight));
    for (size_t c = 0; c < e.point.size(); ++c)
      dev = std::max(dev,
                     std::abs(e.weight * e.point[c] - f.weight * f.point[c]));
  }
  return dev;
}

JoinPoint make_join2(double s, std::vector<double> first,
                     std::vector<double> second) {
  JoinPoint p;
  p.entries = {{s, std::move(first)}, {1 - s, std::move(second)}};
  p.validate();
  return p;
}

JoinPoint make_join3(double w0, std::vector<double> p0, double w1,
                     std::vector<double> p1, double w2,
                     std::vector<double> p2) {
  JoinPoint p;
  p.entries = {{w0, std::move(p0)}, {w1, std::move(p1)}, {w2, std::move(p2)}};
  p.validate();
  return p;
}

JoinPoint drop_factor(const JoinPoint& p, int factor) {
  if (p.entries[factor].weight > JoinPoint::kDropTol)
    throw std::domain_error("cannot drop a factor with positive weight");
  JoinPoint out;
  for (int i = 0; i < p.arity(); ++i)
    if (i != factor) out.entries.push_back(p.entries[i]);
  return out;
}

JoinPoint alpha_map(const std::vector<double>& a, const JoinPoint& yz,
                    double t) {
  check_unit(t, "t");
  if (yz.arity() != 2) throw std::domain_error("alpha expects a 2-fold join");
  double s = yz.entries[0].weight;
  return make_join3(s * t, a, s * (1 - t), yz.entries[0].point,
                    1 - s, yz.entries[1].point);
}

JoinPoint beta_map(const std::vector<double>& a, const JoinPoint& yz,
                   double t) {
  check_unit(t, "t");
  if (yz.arity() != 2) throw std::domain_error("beta expects a 2-fold join");
  double s = yz.entries[0].weight;
  return make_join3(t, a, s * (1 - t), yz.entries[0].point,
                    (1 - s) * (1 - t), yz.entries[1].point);
}

JoinPoint join_map(const FlatMap& f, const JoinPoint& xz) {
  if (xz.arity() != 2) throw std::domain_error("J_Z expects a 2-fold join");
  JoinPoint out = xz;
  out.entries[0].point = f(xz.entries[0].point);
  return out;
}

JoinPoint join_map_flattened(const JoinValuedMap& f, const JoinPoint& xz) {
  if (xz.arity() != 2) throw std::domain_error("J_Z expects a 2-fold join");
  NestedLeft nested;
  nested.s = xz.entries[0].weight;
  nested.xy = f(xz.entries[0].point);
  nested.z = xz.entries[1].point;
  return assoc_left(nested);
}

JoinPoint psi_map_flattened(const PairJoinValuedMap& f,
                            const std::vector<double>& a,
                            const JoinPoint& xz) {
  if (xz.arity() != 2) throw std::domain_error("psi expects a 2-fold join");
  NestedLeft nested;
  nested.s = xz.entries[0].weight;
  nested.xy = f(a, xz.entries[0].point);
  nested.z = xz.entries[1].point;
  return assoc_left(nested);
}

JoinPoint assoc_left(const NestedLeft& p) {
  if (p.xy.arity() != 2)
    throw std::domain_error("assoc expects a nested 2-fold join");
  double t = p.xy.entries[0].weight;
  return make_join3(p.s * t, p.xy.entries[0].point, p.s * (1 - t),
                    p.xy.entries[1].point, 1 - p.s, p.z);
}

NestedLeft assoc_left_inverse(const JoinPoint& p) {
  if (p.arity() != 3) throw std::domain_error("assoc inverse expects 3 factors");
  NestedLeft out;
  double a = p.entries[0].weight, b = p.entries[1].weight;
  out.s = a + b;
  double t = out.s > JoinPoint::kDropTol ? a / out.s : 1.0;
  out.xy = make_join2(t, p.entries[0].point, p.entries[1].point);
  out.z = p.entries[2].point;
  return out;
}

JoinPoint assoc_right(const NestedRight& p) {
  if (p.yz.arity() != 2)
    throw std::domain_error("assoc expects a nested 2-fold join");
  double s = p.yz.entries[0].weight;
  return make_join3(p.t, p.x, s * (1 - p.t), p.yz.entries[0].point,
                    (1 - s) * (1 - p.t), p.yz.entries[1].point);
}

NestedRight assoc_right_inverse(const JoinPoint& p) {
  if (p.arity() != 3) throw std::domain_error("assoc inverse expects 3 factors");
  NestedRight out;
  out.t = p.entries[0].weight;
  out.x = p.entries[0].point;
  double b = p.entries[1].weight, c = p.entries[2].weight;
  double s = (b + c) > JoinPoint::kDropTol ? b / (b + c) : 1.0;
  out.yz = make_join2(s, p.entries[1].point, p.entries[2].point);
  return out;
}

// ---------------------------------------------------------------------------

CompactifiedPoint CompactifiedPoint::inf() {
  CompactifiedPoint p;
  p.infinite = true;
  return p;
}

CompactifiedPoint CompactifiedPoint::at(std::vector<double> coords) {
  CompactifiedPoint p;
  p.v = std::move(coords);
  return p;
}

double CompactifiedPoint::deviation(const CompactifiedPoint& a,
                                    const CompactifiedPoint& b) {
  if (a.infinite != b.infinite) return kInf;
  if (a.infinite) return 0;
  if (a.v.size() != b.v.size()) return kInf;
  double dev = 0;
  for (size_t i = 0; i < a.v.size(); ++i)
    dev = std::max(dev, std::abs(a.v[i] - b.v[i]));
  return dev;
}

double SumSpace::norm(const std::vector<double>& w) const {
  return euclid(w, 0, dim_u) + euclid(w, dim_u, w.size());
}

double phi(double x) {
  if (x >= 1.0) return kInf;
  return x / (1.0 - x);
}

PinchPoint pinch(const CompactifiedPoint& u, const SumSpace& space) {
  if (u.infinite) return {1, CompactifiedPoint::inf()};
  double r = space.norm(u.v);
  if (r <= 1.0) {
    double c = phi(r);
    if (std::isinf(c)) return {0, CompactifiedPoint::inf()};  // the seam
    return {0, CompactifiedPoint::at(scaled(u.v, c))};
  }
  return {1, CompactifiedPoint::at(scaled(u.v, 1.0 - 1.0 / r))};
}

SelfMap tau(const SelfMap& f, const SumSpace& space) {
  return [f, space](const CompactifiedPoint& u) {
    PinchPoint p = pinch(u, space);
    if (p.copy == 0) {
      // seam: identity at infinity agrees with f at 0
      if (p.p.infinite) return CompactifiedPoint::inf();
      return p.p;
    }
    return f(p.p);
  };
}

SelfMap sigma(const SelfMap& f, const SumSpace& space) {
  return [f, space](const CompactifiedPoint& u) {
    PinchPoint p = pinch(u, space);
    if (p.copy == 0) {
      // radial inversion on the first copy; inv(inf) = 0 at the seam
      if (p.p.infinite)
        return CompactifiedPoint::at(std::vector<double>(space.dim(), 0.0));
      double r = space.norm(p.p.v);
      if (r == 0.0) return CompactifiedPoint::inf();
      return CompactifiedPoint::at(scaled(p.p.v, 1.0 / (r * r)));
    }
    return f(p.p);
  };
}

SelfMap smash_with_sphere(const SelfMap& f, const SumSpace& space) {
  return [f, space](const CompactifiedPoint& w) {
    if (w.infinite) return CompactifiedPoint::inf();
    std::vector<double> u(w.v.begin(), w.v.begin() + space.dim_u);
    CompactifiedPoint fu = f(CompactifiedPoint::at(std::move(u)));
    if (fu.infinite) return CompactifiedPoint::inf();
    std::vector<double> out = fu.v;
    out.insert(out.end(), w.v.begin() + space.dim_u, w.v.end());
    return CompactifiedPoint::at(std::move(out));
  };
}

CompactifiedPoint h_homotopy(double t, const SelfMap& f,
                             const CompactifiedPoint& w,
                             const SumSpace& space) {
  check_unit(t, "t");
  if (w.infinite) {
    if (t == 0.0)
      throw std::domain_error("h is branch-ambiguous at (t, point) = (0, inf)");
    return CompactifiedPoint::inf();
  }
  const int du = space.dim_u;
  double ru = euclid(w.v, 0, du);
  double rv = euclid(w.v, du, w.v.size());
  double r = ru + t * rv;  // |u + t v| in the sum norm

  if (r <= 1.0) {
    double c = phi(r);
    if (std::isinf(c)) return CompactifiedPoint::inf();
    std::vector<double> out(w.v.size());
    for (int i = 0; i < du; ++i) out[i] = c * w.v[i];
    for (size_t i = du; i < w.v.size(); ++i)
      out[i] = (c * t + (1.0 - t)) * w.v[i];
    return CompactifiedPoint::at(std::move(out));
  }

  std::vector<double> arg(du);
  for (int i = 0; i < du; ++i) arg[i] = (1.0 - 1.0 / r) * w.v[i];
  CompactifiedPoint fu = f(CompactifiedPoint::at(std::move(arg)));
  if (fu.infinite) return CompactifiedPoint::inf();
  std::vector<double> out = fu.v;
  for (size_t i = du; i < w.v.size(); ++i)
    out.push_back((1.0 - t / r) * w.v[i]);
  return CompactifiedPoint::at(std::move(out));
}

double SuspensionPoint::deviation(const SuspensionPoint& a,
                                  const SuspensionPoint& b) {
  double dt = std::abs(a.t - b.t);
  bool a_end = a.t <= 1e-12 || a.t >= 1 - 1e-12;
  bool b_end = b.t <= 1e-12 || b.t >= 1 - 1e-12;
  if (a_end && b_end) return dt;  // endpoint classes collapse x
  if (a.x.size() != b.x.size()) return kInf;
  double dev = dt;
  for (size_t i = 0; i < a.x.size(); ++i)
    dev = std::max(dev, std::abs(a.x[i] - b.x[i]));
  return dev;
}

SuspensionPoint eta(const std::vector<double>& x, double t) {
  check_unit(t, "t");
  return {t, x};
}

}  // namespace equistab
