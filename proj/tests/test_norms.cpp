#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "orlicz/norms.hpp"
#include "orlicz/quadrature.hpp"
#include "test_support.hpp"

using namespace orlicz;
using namespace orlicz::profiles;

namespace {
constexpr double kTol = 1e-8;

double constant_gauge_oracle(double c, const OrliczFunction& phi,
                             const Ball& ball) {
  // J(lambda) = |B| Phi(c/lambda) = 1  <=>  lambda = c / Phi^{-1}(1/|B|)
  return c / phi.inverse(1.0 / ball.measure());
}
}  // namespace

TEST_CASE("constant profiles match the closed-form gauge") {
  Ball b2(2, 1.0), b3(3, 0.6), tiny(2, 1e-12);
  for (double c : {0.5, 1.0, 7.0}) {
    auto f2 = constant(c, 1.0);
    for (auto kind :
         {OrliczKind::kLogType, OrliczKind::kExpType, OrliczKind::kExponential}) {
      OrliczFunction phi(kind, 2, 1.5);
      auto r = luxemburg_norm(f2, phi, b2, kTol);
      CHECK(r.status == NormStatus::kFinite);
      CHECK(r.value ==
            doctest::Approx(constant_gauge_oracle(c, phi, b2)).epsilon(1e-7));
      CHECK(std::abs(r.functional_at_value - 1.0) <= 10.0 * kTol);
      CHECK(r.bracket_lo <= r.value);
    }
    OrliczFunction phi3(OrliczKind::kLogType, 3, 0.9);
    auto f3 = constant(c, 0.6);
    auto r3 = luxemburg_norm(f3, phi3, b3, kTol);
    CHECK(r3.value ==
          doctest::Approx(constant_gauge_oracle(c, phi3, b3)).epsilon(1e-7));
  }
  // exponential-class closed form on a very small ball
  OrliczFunction e15(OrliczKind::kExponential, 2, 1.5);
  auto rt = exp_norm(constant(1.0, 1e-12), 1.5, tiny, kTol);
  double oracle =
      1.0 / std::pow(std::log1p(1.0 / tiny.measure()), (2.0 - 1.0) / 1.5);
  CHECK(rt.value == doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("log profile gauge for the borderline exponential class") {
  // n = 2, s = 1 (p = 1), f = log(1/rho) on B_1:
  // J(lambda) = 2 pi (1/(2 - 1/lambda) - 1/2) = 1 solves to (pi+1)/2
  auto f = log_inverse(1.0, 1.0);
  Ball b(2, 1.0);
  auto r = exp_norm(f, 1.0, b, kTol);
  CHECK(r.status == NormStatus::kFinite);
  CHECK(r.value == doctest::Approx((M_PI + 1.0) / 2.0).epsilon(1e-6));
}

TEST_CASE("log-type gauge of the unit constant (in-test root oracle)") {
  // For f = 1 on the unit disc the modular is pi * N_1(1/lambda), so the
  // gauge solves pi * [(1+x) log(1+x) - x] = 1 with x = 1/lambda.  Solve
  // that scalar equation here, independently of the library bisection.
  auto modular_root = [] {
    double lo = 1e-9, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      double v = M_PI * ((1.0 + mid) * std::log1p(mid) - mid) - 1.0;
      (v < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  double expected = 1.0 / modular_root;  // = 1.1134500 to 8 digits
  CHECK(expected == doctest::Approx(1.1134500).epsilon(1e-7));

  auto f = constant(1.0, 1.0);
  Ball b(2, 1.0);
  OrliczFunction N1(OrliczKind::kLogType, 2, 1.0);
  auto r = luxemburg_norm(f, N1, b, kTol);
  CHECK(r.value == doctest::Approx(expected).epsilon(2e-6));
}

TEST_CASE("log-type gauge of the log profile (frozen two-route value)") {
  // root of 2 pi int_0^1 N_1(log(1/rho)/lambda) rho drho = 1; frozen from
  // an independent solve (Brent on adaptive quadrature of the modular)
  auto f = log_inverse(1.0, 1.0);
  Ball b(2, 1.0);
  OrliczFunction N1(OrliczKind::kLogType, 2, 1.0);
  auto r = luxemburg_norm(f, N1, b, kTol);
  CHECK(r.value == doctest::Approx(0.7231039).epsilon(2e-6));
}

TEST_CASE("certified divergence of exponential-class gauges") {
  auto f = log_inverse(1.0, 1.0);
  Ball b(2, 1.0);
  auto r = exp_norm(f, 2.0, b, kTol);  // p = 2 > 1
  CHECK(r.status == NormStatus::kInfinite);
  CHECK(r.reason == DivergenceReason::kAnalyticTail);
  CHECK(std::isinf(r.value));

  OrliczFunction M2(OrliczKind::kExpType, 2, 2.0);
  auto rm = luxemburg_norm(f, M2, b, kTol);
  CHECK(rm.status == NormStatus::kInfinite);

  // the log-type gauge of the same profile stays finite
  OrliczFunction N2(OrliczKind::kLogType, 2, 2.0);
  auto rn = luxemburg_norm(f, N2, b, kTol);
  CHECK(rn.status == NormStatus::kFinite);
  CHECK(std::isfinite(rn.value));
}

TEST_CASE("zero profile yields a zero result") {
  Ball b(2, 1.0);
  auto z = constant(0.0, 1.0);
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  CHECK(luxemburg_norm(z, N, b, kTol).status == NormStatus::kZero);
  CHECK(exp_norm(z, 1.0, b, kTol).status == NormStatus::kZero);
  CHECK(alt_norm(z, 2, 1.0, b, kTol).status == NormStatus::kZero);
  CHECK(lebesgue_norm(z, 2.0, b, kTol) == 0.0);
}

TEST_CASE("gauge norms are absolutely homogeneous") {
  std::mt19937 rng(20260819);
  Ball b(2, 1.0);
  OrliczFunction N(OrliczKind::kLogType, 2, 1.2);
  for (int trial = 0; trial < 8; ++trial) {
    auto f = testsupport::random_profile(rng, 1.0);
    double c = 0.3 + 2.7 * trial / 7.0;
    double base = luxemburg_norm(f, N, b, kTol).value;
    double scaled = luxemburg_norm(scale(f, c), N, b, kTol).value;
    CHECK(scaled == doctest::Approx(c * base).epsilon(5e-7));
  }
}

TEST_CASE("triangle inequality for the convex gauges") {
  std::mt19937 rng(7);
  Ball b(2, 1.0);
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = testsupport::random_profile(rng, 1.0);
    auto g = testsupport::random_profile(rng, 1.0);
    double nf = luxemburg_norm(f, N, b, kTol).value;
    double ng = luxemburg_norm(g, N, b, kTol).value;
    double nsum = luxemburg_norm(add(f, g), N, b, kTol).value;
    CHECK(nsum <= (nf + ng) * (1.0 + 1e-6) + 1e-12);
  }
}

TEST_CASE("norm grows with the domain for nonnegative profiles") {
  Ball small(2, 0.5), big(2, 1.0);
  auto f = truncate_at(log_inverse(1.0, 1.0), 3.0);
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  CHECK(luxemburg_norm(f, N, small, kTol).value <
        luxemburg_norm(f, N, big, kTol).value);
  CHECK(exp_norm(f, 1.0, small, kTol).value <
        exp_norm(f, 1.0, big, kTol).value);
}

TEST_CASE("amalgam norm sandwich") {
  std::mt19937 rng(99);
  Ball b(2, 1.0);
  for (double s : {0.8, 1.0, 1.6}) {
    OrliczFunction N(OrliczKind::kLogType, 2, s);
    for (int trial = 0; trial < 5; ++trial) {
      auto f = testsupport::random_profile(rng, 1.0);
      double lux = luxemburg_norm(f, N, b, kTol).value;
      double alt = alt_norm(f, 2, s, b, kTol).value;
      CHECK(alt >= lux * (1.0 - 1e-6));
      CHECK(alt <= 2.0 * lux * (1.0 + 1e-6));
    }
  }
  CHECK_THROWS_AS(alt_norm(constant(1.0, 1.0), 2, 0.4, b, kTol),
                  std::invalid_argument);
}

TEST_CASE("amalgam norm of a constant against a hand-reduced objective") {
  // A(lambda) = lambda (1 + |B| N(c/lambda)) minimized over lambda; evaluate
  // the same objective on a fine grid as the oracle
  Ball b(2, 1.0);
  double c = 2.0;
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  auto lib = alt_norm(constant(c, 1.0), 2, 1.0, b, kTol);
  double best = 1e300;
  for (int i = 0; i <= 200000; ++i) {
    double lam = 1e-3 * std::pow(1e6, i / 200000.0);
    double a = lam * (1.0 + b.measure() * N.value(c / lam));
    best = std::min(best, a);
  }
  CHECK(lib.value == doctest::Approx(best).epsilon(1e-6));
}

TEST_CASE("Hoelder inequality for the complementary pair") {
  std::mt19937 rng(20260819);
  Ball b(2, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    double s = (trial % 2 == 0) ? 1.0 : 1.5;
    OrliczFunction N(OrliczKind::kLogType, 2, s);
    OrliczFunction M(OrliczKind::kExpType, 2, s);
    auto f = testsupport::random_profile(rng, 1.0);
    auto g = testsupport::random_profile(rng, 1.0);
    double nm = luxemburg_norm(f, M, b, kTol).value;
    double nn = luxemburg_norm(g, N, b, kTol).value;
    std::vector<double> cuts = f.interior_breakpoints(1.0);
    for (double cut : g.interior_breakpoints(1.0)) cuts.push_back(cut);
    auto prod = radial_integral(
        [&](double r) { return std::abs(f.value(r) * g.value(r)); }, b, 1e-9,
        cuts);
    CHECK(prod.value <= 2.0 * nm * nn * (1.0 + 1e-6));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("gauge bounded by modular plus one") {
  // for any Young function Phi: ||f|| <= int_B Phi(|f|) dx + 1
  std::mt19937 rng(4242);
  Ball b(2, 1.0);
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = testsupport::random_profile(rng, 1.0);
    double lux = luxemburg_norm(f, N, b, kTol).value;
    auto modular = radial_integral(
        [&](double r) { return N.value(std::abs(f.value(r))); }, b, 1e-9,
        f.interior_breakpoints(1.0));
    CHECK(lux <= modular.value + 1.0 + 1e-7);
  }
}

TEST_CASE("substitution route agrees with the direct route") {
  Ball b(2, 1.0);
  std::vector<RadialProfile> monotone;
  monotone.push_back(constant(2.0, 1.0));
  monotone.push_back(truncate_at(log_inverse(1.0, 1.0), 2.0));
  monotone.push_back(power(3.0, 3.0, 2.0, 1.0));
  monotone.push_back(truncate_at(scale(log_inverse(1.0, 1.0), 0.7), 4.0));
  for (const auto& f : monotone) {
    for (double s : {1.0, 1.8}) {
      auto direct = exp_norm(f, s, b, kTol, false);
      auto sub = exp_norm(f, s, b, kTol, true);
      REQUIRE(direct.status == NormStatus::kFinite);
      REQUIRE(sub.status == NormStatus::kFinite);
      CHECK(std::abs(direct.value - sub.value) <=
            5.0 * kTol * direct.value + 5.0 * kTol);
    }
  }
  // non-monotone profiles are rejected on the substitution route
  auto hump = bump(1.0, 0.2, 0.8, 1.0);
  CHECK_THROWS_AS(exp_norm(hump, 1.0, b, kTol, true), std::invalid_argument);
}

TEST_CASE("Lebesgue norms") {
  Ball b(2, 1.0);
  CHECK(lebesgue_norm(constant(1.0, 1.0), 3.0, b, 1e-10) ==
        doctest::Approx(std::pow(M_PI, 1.0 / 3.0)).epsilon(1e-9));
  // || log(1/rho) ||_2 on B_1: integral 2 pi int rho log^2 = pi/2
  CHECK(lebesgue_norm(log_inverse(1.0, 1.0), 2.0, b, 1e-10) ==
        doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-8));
  CHECK_THROWS_AS(lebesgue_norm(constant(1.0, 1.0), 0.5, b, 1e-8),
                  std::invalid_argument);
}

TEST_CASE("solve certificate is reported") {
  Ball b(2, 1.0);
  auto f = truncate_at(log_inverse(1.0, 1.0), 5.0);
  for (double s : {1.0, 2.0}) {
    OrliczFunction N(OrliczKind::kLogType, 2, s);
    auto r = luxemburg_norm(f, N, b, kTol);
    CHECK(std::abs(r.functional_at_value - 1.0) <= 10.0 * kTol);
    CHECK(r.bracket_hi == r.value);
    CHECK(r.bracket_lo < r.bracket_hi);
    CHECK((r.bracket_hi - r.bracket_lo) <= 2.0 * kTol * r.bracket_hi);
  }
}

TEST_CASE("norm input validation") {
  Ball b(2, 1.0);
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  auto f = constant(1.0, 1.0);
  CHECK_THROWS_AS(luxemburg_norm(f, N, b, 0.0), std::invalid_argument);
  OrliczFunction alt(OrliczKind::kAlternative, 2, 1.0);
  CHECK_THROWS_AS(luxemburg_norm(f, alt, b, kTol), std::invalid_argument);
  // profile domain must cover the ball
  Ball big(2, 2.0);
  CHECK_THROWS_AS(luxemburg_norm(f, N, big, kTol), std::invalid_argument);
}
