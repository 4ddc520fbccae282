#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "orlicz/orlicz_function.hpp"
#include "test_support.hpp"

using namespace orlicz;

namespace {

// closed form for the log-type function at integer exponent m = 1:
// int_0^t log(1+tau) dtau = (1+t) log(1+t) - t
double log_type_m1(double t) { return (1.0 + t) * std::log1p(t) - t; }

// m = 2: substituting y = log(1+tau) gives int_0^L y^2 e^y dy with
// antiderivative e^y (y^2 - 2y + 2)
double log_type_m2(double t) {
  double L = std::log1p(t);
  return (1.0 + t) * (L * L - 2.0 * L + 2.0) - 2.0;
}

}  // namespace

TEST_CASE("log-type function against integer closed forms") {
  OrliczFunction n1(OrliczKind::kLogType, 2, 1.0);  // m = 1
  OrliczFunction n2(OrliczKind::kLogType, 3, 1.0);  // m = 2
  for (double t : {1e-6, 1e-3, 0.2, 0.5, 1.0, 3.0, 10.0, 100.0, 1e6}) {
    CHECK(n1.value(t) == doctest::Approx(log_type_m1(t)).epsilon(1e-12));
    CHECK(n2.value(t) == doctest::Approx(log_type_m2(t)).epsilon(1e-12));
  }
  CHECK(n1.value(0.0) == 0.0);
}

TEST_CASE("log-type function against direct quadrature for fractional m") {
  for (double s : {0.4, 0.7, 1.3, 2.5}) {
    OrliczFunction N(OrliczKind::kLogType, 3, s);  // m = 2/s
    double m = N.log_exponent();
    for (double t : {0.3, 1.0, 4.0, 50.0}) {
      double ref = testsupport::simpson(
          [m](double tau) { return std::pow(std::log1p(tau), m); }, 0.0, t,
          200000);
      CHECK(N.value(t) == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("exp-type function: series vs closed form and quadrature") {
  // p = 1 closed form e^t - 1 - t
  OrliczFunction m1(OrliczKind::kExpType, 2, 1.0);
  for (double t : {0.1, 1.0, 5.0, 20.0})
    CHECK(m1.value(t) ==
          doctest::Approx(std::expm1(t) - t).epsilon(1e-13));

  // p = 2 against direct quadrature of e^{tau^2} - 1
  OrliczFunction m2(OrliczKind::kExpType, 2, 2.0);
  for (double t : {0.2, 1.0, 2.0, 4.0}) {
    double ref = testsupport::simpson(
        [](double tau) { return std::expm1(tau * tau); }, 0.0, t, 200000);
    CHECK(m2.value(t) == doctest::Approx(ref).epsilon(1e-10));
  }

  // fractional p
  OrliczFunction mf(OrliczKind::kExpType, 3, 1.2);  // p = 0.6
  for (double t : {0.5, 2.0, 30.0}) {
    double ref = testsupport::simpson(
        [](double tau) { return std::expm1(std::pow(tau, 0.6)); }, 0.0, t,
        200000);
    CHECK(mf.value(t) == doctest::Approx(ref).epsilon(1e-9));
  }

  // overflow becomes +infinity, not garbage
  CHECK(std::isinf(m2.value(100.0)));
}

TEST_CASE("exponential-class function and inverses") {
  OrliczFunction e2(OrliczKind::kExponential, 2, 2.0);  // e^{t^2} - 1
  CHECK(e2.value(1.5) == doctest::Approx(std::expm1(2.25)).epsilon(1e-14));
  CHECK(e2.value(0.0) == 0.0);
  CHECK(std::isinf(e2.value(30.0)));
  CHECK(e2.inverse(std::expm1(2.25)) == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(e2.convex());
  OrliczFunction elow(OrliczKind::kExponential, 3, 1.0);  // p = 0.5 < 1
  CHECK_FALSE(elow.convex());

  // bisection inverses round-trip for the integral kinds
  OrliczFunction N(OrliczKind::kLogType, 2, 0.8);
  OrliczFunction M(OrliczKind::kExpType, 2, 1.7);
  for (double y : {1e-8, 1e-3, 0.5, 2.0, 100.0, 1e8}) {
    CHECK(N.value(N.inverse(y)) == doctest::Approx(y).epsilon(1e-10));
    CHECK(M.value(M.inverse(y)) == doctest::Approx(y).epsilon(1e-10));
  }
  CHECK(N.inverse(0.0) == 0.0);
}

TEST_CASE("complementary pair structure") {
  // right derivatives: N'(t) = log^m(1+t), M'(t) = e^{t^p} - 1 with p m = 1,
  // so N'(M'(t)) = t
  std::mt19937 rng(20260819);
  std::uniform_real_distribution<double> unif(0.05, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    double s = 0.4 + 2.0 * (trial % 7) / 7.0;
    int n = 2 + trial % 3;
    double p = s / (n - 1.0), m = (n - 1.0) / s;
    double t = unif(rng);
    double Mp = std::expm1(std::pow(t, p));
    double Np_of_Mp = std::pow(std::log1p(Mp), m);
    CHECK(Np_of_Mp == doctest::Approx(t).epsilon(1e-12));
  }

  // Young's inequality a b <= N(a) + M(b) on random samples
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  OrliczFunction M(OrliczKind::kExpType, 2, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    double a = unif(rng) * 10.0, b = unif(rng);
    CHECK(a * b <= N.value(a) + M.value(b) + 1e-12);
  }
}

TEST_CASE("convexity and monotonicity on a grid") {
  for (auto kind : {OrliczKind::kLogType, OrliczKind::kExpType}) {
    OrliczFunction f(kind, 2, 1.3);
    double prev = 0.0;
    for (int i = 1; i <= 60; ++i) {
      double t = 0.15 * i;
      double v = f.value(t);
      CHECK(v > prev);
      prev = v;
      // midpoint convexity
      double mid = f.value(t * 0.75);
      CHECK(mid <= 0.5 * (f.value(t * 0.5) + f.value(t)) + 1e-12);
    }
  }
}

TEST_CASE("exponential majorant constant for the exp-type function") {
  for (int n : {2, 3}) {
    for (double s : {1.0, 1.5, 2.0, double(n - 1)}) {
      double C = exp_majorant_constant(n, s);
      OrliczFunction M(OrliczKind::kExpType, n, s);
      double p = M.exp_exponent();
      CHECK(C >= 1.0);
      bool sound = true;
      double worst = 0.0;
      for (int i = 0; i <= 2000; ++i) {
        double t = std::exp(-8.0 + 12.0 * i / 2000.0);
        double v = M.value(t);
        if (!std::isfinite(v)) continue;
        double lhs = std::log1p(v);
        double rhs = C * std::pow(t, p);
        worst = std::max(worst, lhs - rhs);
        if (lhs > rhs * (1.0 + 1e-9)) sound = false;
      }
      CHECK(sound);
      CHECK(worst <= 1e-9 * C);
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(OrliczFunction(OrliczKind::kLogType, 1, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrliczFunction(OrliczKind::kLogType, 2, 0.0),
                  std::invalid_argument);
  OrliczFunction alt(OrliczKind::kAlternative, 2, 1.0);
  CHECK_THROWS_AS(alt.value(1.0), std::logic_error);
  OrliczFunction N(OrliczKind::kLogType, 2, 1.0);
  CHECK_THROWS_AS(N.value(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(N.inverse(-1.0), std::invalid_argument);
}
