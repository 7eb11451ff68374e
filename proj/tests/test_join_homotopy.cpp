#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "equistab/join_homotopy.hpp"
#include "equistab/verify.hpp"

using namespace equistab;

TEST_CASE("s' and t' formulas") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> un(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    double s = un(rng), t = un(rng);
    CHECK(s_prime(0, t) == doctest::Approx(t));
    CHECK(t_prime(s, 0) == doctest::Approx(0.0));
    CHECK(t_prime(s, 1) == doctest::Approx(1.0));
    CHECK(s_prime(s, t) >= 0.0);
    CHECK(s_prime(s, t) <= 1.0);
    CHECK(t_prime(s, t) >= 0.0);
    CHECK(t_prime(s, t) <= 1.0);
  }
  CHECK(s_prime(0.5, 0.5) == doctest::Approx(0.75));
  CHECK(t_prime(0.5, 0.5) == doctest::Approx(2.0 / 3.0));
  CHECK(t_prime(0, 0) == 0.0);
  CHECK(t_prime(0, 0.25) == doctest::Approx(1.0));

  CHECK_THROWS_AS((void)s_prime(1.5, 0), std::domain_error);
}

TEST_CASE("alpha~ and beta~") {
  SimplexPoint a = alpha_tilde(0.75, 2.0 / 3.0);
  CHECK(a.t0 == doctest::Approx(0.5));
  CHECK(a.t1 == doctest::Approx(0.25));
  CHECK(a.t2 == doctest::Approx(0.25));
  SimplexPoint b = beta_tilde(0.5, 0.5);
  CHECK(SimplexPoint::deviation(a, b) < 1e-12);

  for (double t : {0.0, 0.3, 1.0}) {
    SimplexPoint p = alpha_tilde(1.0, t);
    CHECK(p.on_face(2));
    CHECK(p.t0 == doctest::Approx(t));
  }
  for (double s : {0.0, 0.6, 1.0}) {
    SimplexPoint p = beta_tilde(s, 1.0);
    CHECK(p.t0 == doctest::Approx(1.0));
    CHECK(p.t1 == doctest::Approx(0.0));
    CHECK(p.t2 == doctest::Approx(0.0));
  }
}

TEST_CASE("theta~ rejects the unverified origin region") {
  CHECK_THROWS_AS((void)theta_tilde(0.5, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)theta_tilde(0.5, 1e-7, 1e-7), std::domain_error);
  CHECK_NOTHROW((void)theta_tilde(0.5, 0.1, 0.0));
}

TEST_CASE("alpha and beta restriction examples") {
  std::vector<double> a = {1.0, -2.0};
  JoinPoint yz = make_join2(0.6, {1.0, 0.0, 2.0}, {3.0, 4.0});

  JoinPoint at0 = alpha_map(a, yz, 0);
  CHECK(at0.entries[0].weight == 0.0);
  CHECK(JoinPoint::deviation(drop_factor(at0, 0), yz) < 1e-12);

  JoinPoint at1 = alpha_map(a, yz, 1);
  CHECK(at1.entries[1].weight == 0.0);
  CHECK(at1.entries[0].weight == doctest::Approx(0.6));

  JoinPoint bt1 = beta_map(a, yz, 1);
  CHECK(bt1.entries[0].weight == doctest::Approx(1.0));
  CHECK(bt1.entries[1].weight == 0.0);
  CHECK(bt1.entries[2].weight == 0.0);
}

TEST_CASE("join map basics") {
  JoinPoint xz = make_join2(0.25, {2.0, 0.0}, {0.0, 1.0});
  FlatMap ident = [](const std::vector<double>& v) { return v; };
  CHECK(JoinPoint::deviation(join_map(ident, xz), xz) == 0.0);
}

TEST_CASE("join point equality edge cases") {
  JoinPoint a = make_join2(0.0, {5.0, 5.0}, {1.0, 1.0});
  JoinPoint b = make_join2(0.0, {-7.0, 0.1}, {1.0, 1.0});
  CHECK(JoinPoint::deviation(a, b) == 0.0);
  JoinPoint c = make_join2(1e-13, {5.0, 5.0}, {1.0, 1.0});
  CHECK(JoinPoint::deviation(c, b) < 1e-12);
  JoinPoint d = make_join2(0.5, {5.0, 5.0}, {1.0, 1.0});
  CHECK(JoinPoint::deviation(d, b) > 1.0);
  CHECK_THROWS_AS(make_join3(0.5, {1.0}, 0.4, {1.0}, 0.4, {1.0}).validate(),
                  std::domain_error);
}

TEST_CASE("eta, phi and pinch") {
  SuspensionPoint p0 = eta({1.0, 2.0}, 0.0);
  SuspensionPoint q0 = eta({-4.0, 0.5}, 0.0);
  CHECK(SuspensionPoint::deviation(p0, q0) == 0.0);  // both are alpha_0
  SuspensionPoint p1 = eta({1.0, 2.0}, 1.0);
  CHECK(SuspensionPoint::deviation(p1, q0) > 0.5);

  CHECK(phi(0.0) == 0.0);
  CHECK(phi(0.5) == doctest::Approx(1.0));
  CHECK(std::isinf(phi(1.0)));

  SumSpace su{2, 0};
  PinchPoint inner = pinch(CompactifiedPoint::at({0.25, 0.0}), su);
  CHECK(inner.copy == 0);
  CHECK(inner.p.v[0] == doctest::Approx(0.25 / 0.75 * 0.25));
  PinchPoint outer = pinch(CompactifiedPoint::at({2.0, 0.0}), su);
  CHECK(outer.copy == 1);
  CHECK(outer.p.v[0] == doctest::Approx(1.0));
  PinchPoint seam = pinch(CompactifiedPoint::at({1.0, 0.0}), su);
  CHECK(seam.copy == 0);
  CHECK(seam.p.infinite);
}

TEST_CASE("h homotopy formulas at the endpoints, explicit values") {
  SumSpace suv{2, 2};
  SelfMap f = [](const CompactifiedPoint& u) {
    if (u.infinite) return CompactifiedPoint::inf();
    double r = std::hypot(u.v[0], u.v[1]);
    if (r == 0.0) return CompactifiedPoint::inf();
    double c = (r + 1.0 / r) / r;
    return CompactifiedPoint::at({c * u.v[0], c * u.v[1]});
  };

  // |u| <= 1 at t = 0: phi(|u|) u + v
  CompactifiedPoint w = CompactifiedPoint::at({0.3, 0.0, 5.0, 0.0});
  CompactifiedPoint got = h_homotopy(0, f, w, suv);
  double c = 0.3 / 0.7;
  CHECK(got.v[0] == doctest::Approx(c * 0.3));
  CHECK(got.v[1] == doctest::Approx(0.0));
  CHECK(got.v[2] == doctest::Approx(5.0));

  // |u+v| >= 1 at t = 1: f((1 - 1/|u+v|) u) + (1 - 1/|u+v|) v
  CompactifiedPoint w2 = CompactifiedPoint::at({2.0, 0.0, 1.0, 0.0});
  CompactifiedPoint got2 = h_homotopy(1, f, w2, suv);
  double r = 3.0;  // sum norm
  double shrink = 1.0 - 1.0 / r;
  CompactifiedPoint fu = f(CompactifiedPoint::at({shrink * 2.0, 0.0}));
  CHECK(got2.v[0] == doctest::Approx(fu.v[0]));
  CHECK(got2.v[2] == doctest::Approx(shrink * 1.0));

  CHECK(h_homotopy(1, f, CompactifiedPoint::inf(), suv).infinite);
  CHECK_THROWS_AS((void)h_homotopy(0, f, CompactifiedPoint::inf(), suv),
                  std::domain_error);
}

TEST_CASE("identity suites pass at the default seed") {
  VerifyOptions opt;
  auto join_rows = verify_join_identities(opt);
  for (const VerifyRow& r : join_rows) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
  auto susp_rows = verify_suspension_identities(opt);
  for (const VerifyRow& r : susp_rows) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("identity suites pass across seeds") {
  for (uint64_t seed : {7ull, 99ull, 20260809ull}) {
    VerifyOptions opt;
    opt.seed = seed;
    CHECK(all_pass(verify_join_identities(opt)));
    CHECK(all_pass(verify_suspension_identities(opt)));
  }
}

TEST_CASE("corrupting alpha~ breaks the beta~ factorization") {
  VerifyOptions opt;
  opt.corrupt_alpha_tilde = true;
  auto rows = verify_join_identities(opt);
  bool beta_check_failed = false;
  for (const VerifyRow& r : rows)
    if (r.name.find("beta~ = alpha~") != std::string::npos && !r.pass)
      beta_check_failed = true;
  CHECK(beta_check_failed);
}
