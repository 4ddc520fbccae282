#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "orlicz/counterexample.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/pde.hpp"
#include "orlicz/quadrature.hpp"
#include "test_support.hpp"

using namespace orlicz;
using namespace orlicz::profiles;

namespace {

constexpr double kPi = 3.14159265358979323846;

// independent divergence-form oracle: nested central differences of
// rho^{n-1} |u'|^{n-2} u' built from point values only
double fd_n_laplacian(const RadialProfile& u, int n, double rho) {
  auto du = [&](double r) {
    double h = 1e-6;
    return (u.value(r + h) - u.value(r - h)) / (2.0 * h);
  };
  auto flux = [&](double r) {
    double d = du(r);
    return std::pow(r, n - 1.0) * std::pow(std::abs(d), n - 2.0) * d;
  };
  double H = 1e-4;
  return (flux(rho + H) - flux(rho - H)) / (2.0 * H) /
         std::pow(rho, n - 1.0);
}

}  // namespace

TEST_CASE("n-laplacian of power caps: closed form and finite differences") {
  struct Cap {
    double a, b, p;
  };
  for (Cap c : {Cap{2.0, 1.0, 2.0}, Cap{1.0, 0.5, 3.0}, Cap{0.0, -1.0, 1.5},
                Cap{5.0, 2.0, 2.5}}) {
    auto u = power(c.a, c.b, c.p, 1.0);
    for (int n : {2, 3, 4}) {
      for (double rho : {0.3, 0.6, 0.85}) {
        double d1 = -c.b * c.p * std::pow(rho, c.p - 1.0);
        double lap2 = -c.b * c.p * c.p * std::pow(rho, c.p - 2.0);
        double closed = n == 2 ? lap2
                               : (n - 1.0) *
                                     std::pow(std::abs(d1), n - 2.0) * lap2;
        double lib = n_laplacian(u, n, rho);
        CHECK(lib == doctest::Approx(closed).epsilon(1e-12));
        CHECK(lib == doctest::Approx(fd_n_laplacian(u, n, rho))
                         .epsilon(1e-4));
      }
    }
  }
}

TEST_CASE("the log profile is n-harmonic away from the origin") {
  // the raw profile carries exact derivative laws; the two 1/rho^2 terms
  // cancel up to their last rounding bit
  auto raw = log_inverse(1.0, 1.0);
  for (double rho : {0.1, 0.5, 0.9})
    CHECK(std::abs(n_laplacian(raw, 2, rho)) < 1e-12 / (rho * rho));

  // scaling pipes derivatives through composition, leaving only rounding
  auto u = scale(log_inverse(1.0, 1.0), 2.3);
  for (int n : {2, 3, 4})
    for (double rho : {0.1, 0.3, 0.7, 0.95})
      CHECK(std::abs(n_laplacian(u, n, rho)) < 1e-9);

  // value-only finite differences agree within their own noise floor
  for (int n : {2, 3})
    for (double rho : {0.3, 0.7})
      CHECK(std::abs(fd_n_laplacian(u, n, rho)) < 1e-3);

  // constants have zero gradient and zero n-laplacian
  auto c = constant(3.0, 1.0);
  CHECK(n_laplacian(c, 3, 0.5) == 0.0);
}

TEST_CASE("n-laplacian of a two-piece sum matches finite differences") {
  auto u = add(power(3.0, 1.0, 2.0, 1.0), power(0.0, -1.0, 1.5, 1.0));
  for (double rho : {0.3, 0.8})
    CHECK(n_laplacian(u, 2, rho) ==
          doctest::Approx(fd_n_laplacian(u, 2, rho)).epsilon(1e-4));
}

TEST_CASE("one-sided evaluation at the glue point") {
  auto sol = build_counterexample(2, 0.1);
  // plain evaluation refuses a breakpoint; one-sided values differ because
  // the glue is C1 but not C2: cap side keeps -n eps^{-n}, log side is 0
  CHECK_THROWS_AS(n_laplacian(sol.u, 2, 0.1), std::domain_error);
  CHECK(n_laplacian(sol.u, 2, 0.1, Side::kLeft) ==
        doctest::Approx(-200.0).epsilon(1e-9));
  CHECK(n_laplacian(sol.u, 2, 0.1, Side::kRight) ==
        doctest::Approx(0.0).scale(1e-6));
  CHECK_THROWS_AS(n_laplacian(sol.u, 2, 0.0), std::domain_error);
  CHECK_THROWS_AS(n_laplacian(sol.u, 2, -0.5), std::domain_error);
}

TEST_CASE("glued solution satisfies the equation in the strong sense") {
  for (int n : {2, 3}) {
    double eps = n == 2 ? 0.1 : 0.05;
    auto sol = build_counterexample(n, eps);
    // on the cap the n-laplacian is the constant -n eps^{-n}
    double K = n * std::pow(eps, -double(n));
    for (double frac : {0.2, 0.5, 0.9})
      CHECK(n_laplacian(sol.u, n, frac * eps) ==
            doctest::Approx(-K).epsilon(1e-10));
    PdeProblem prob{n, sol.u, sol.potential, sol.domain};
    auto rep = strong_residual(prob);
    CHECK(rep.scale == doctest::Approx(K).epsilon(1e-6));
    CHECK(rep.max_abs <= 1e-9 * rep.scale);
  }
}

TEST_CASE("strong residual flags a non-solution") {
  // u = 2 - rho^2 with no potential: -lap u = 4, nothing balances it
  PdeProblem prob{2, power(2.0, 1.0, 2.0, 1.0), constant(0.0, 1.0),
                  Ball(2, 1.0)};
  auto rep = strong_residual(prob);
  CHECK(rep.max_abs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(rep.scale == 0.0);
  CHECK_THROWS_AS(strong_residual(prob, 4), std::invalid_argument);
}

TEST_CASE("weak form sees the point mass that the strong form misses") {
  // pure log profile in the plane: pointwise 2-harmonic away from 0, but
  // integrating the flux against phi = 1 - rho^2 exposes the unit point
  // mass at the origin with weight 2 pi phi(0)
  PdeProblem prob{2, log_inverse(1.0, 1.0), constant(0.0, 1.0), Ball(2, 1.0)};
  // pointwise residual is pure rounding noise: the two 1/rho^2 terms cancel
  // analytically, leaving ~ulp(1/rho^2) near the innermost grid point
  CHECK(strong_residual(prob).max_abs < 1e-6);
  auto phi = power(1.0, 1.0, 2.0, 1.0);
  auto rep = weak_residual(prob, phi, 1e-9);
  CHECK(rep.value == doctest::Approx(2.0 * kPi).epsilon(1e-8));
  CHECK(rep.scale == doctest::Approx(2.0 * kPi).epsilon(1e-8));
}

TEST_CASE("glued solution is a genuine weak solution") {
  // the interior cap replaces the point mass by the bounded potential, so
  // the same pairing now cancels to quadrature accuracy
  for (double eps : {0.1, 0.02}) {
    auto sol = build_counterexample(2, eps);
    PdeProblem prob{2, sol.u, sol.potential, sol.domain};
    auto phi = power(1.0, 1.0, 2.0, 1.0);
    auto rep = weak_residual(prob, phi, 1e-10);
    CHECK(rep.scale > 1.0);
    CHECK(std::abs(rep.value) <= 1e-6 * rep.scale);
  }
  // a second, asymmetric test profile
  auto sol = build_counterexample(2, 0.1);
  PdeProblem prob{2, sol.u, sol.potential, sol.domain};
  auto phi2 = power(1.0, 1.0, 3.0, 1.0);  // 1 - rho^3
  auto rep2 = weak_residual(prob, phi2, 1e-10);
  CHECK(std::abs(rep2.value) <= 1e-6 * rep2.scale);
  // test profiles must vanish on the boundary sphere
  CHECK_THROWS_AS(weak_residual(prob, constant(1.0, 1.0), 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(weak_residual(prob, phi2, 0.0), std::invalid_argument);
}

TEST_CASE("structure margins hold for the model pair and fail when starved") {
  auto sol = build_counterexample(2, 0.1);
  PdeProblem prob{2, sol.u, sol.potential, sol.domain};
  std::vector<double> rhos{0.03, 0.08, 0.2, 0.5, 0.9};

  CoefficientSet model;
  model.a = 1.0;
  model.d = sol.potential;
  auto rep = structure_check(prob, model, rhos);
  CHECK(rep.ok());
  CHECK(rep.violations.empty());
  CHECK(rep.flux_margin >= -1e-12);
  CHECK(rep.source_margin >= -1e-12);
  CHECK(rep.coercivity_margin >= -1e-12);

  // halving the gradient coefficient starves the flux bound
  CoefficientSet starved = model;
  starved.a = 0.5;
  auto bad = structure_check(prob, starved, rhos);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.violations.empty());
  CHECK(bad.flux_margin < 0.0);

  // dropping the potential from d starves the source bound instead
  CoefficientSet no_d;
  no_d.a = 1.0;
  auto bad2 = structure_check(prob, no_d, rhos);
  CHECK(bad2.source_margin < 0.0);
  CHECK_FALSE(bad2.ok());
}

TEST_CASE("inhomogeneity gauge agrees with constant closed forms") {
  double tol = 1e-8;

  // only g = 1 on the unit disc: gauge = ||1||^{1/2}
  CoefficientSet only_g;
  only_g.g = constant(1.0, 1.0);
  Ball disc(2, 1.0);
  OrliczFunction N2(OrliczKind::kLogType, 2, 0.8);
  double norm_one = 1.0 / N2.inverse(1.0 / disc.measure());
  CHECK(source_gauge(only_g, 2, 0.8, disc, tol) ==
        doctest::Approx(std::sqrt(norm_one)).epsilon(1e-6));

  // only f = 2 in three dimensions: gauge = ||2||^{1/2}
  CoefficientSet only_f;
  only_f.f = constant(2.0, 1.0);
  Ball ball3(3, 1.0);
  OrliczFunction N3(OrliczKind::kLogType, 3, 0.8);
  double norm_two = 2.0 / N3.inverse(1.0 / ball3.measure());
  CHECK(source_gauge(only_f, 3, 0.8, ball3, tol) ==
        doctest::Approx(std::sqrt(norm_two)).epsilon(1e-6));

  // only e = 1 on the disc: the lifted power e^{n/(n-1)} is again 1, and
  // the aggregation reduces to the same square root as the g-only case
  CoefficientSet only_e;
  only_e.e = constant(1.0, 1.0);
  CHECK(source_gauge(only_e, 2, 0.8, disc, tol) ==
        doctest::Approx(std::sqrt(norm_one)).epsilon(1e-6));

  // no zero-order data at all: gauge is zero
  CoefficientSet empty;
  CHECK(source_gauge(empty, 2, 0.8, disc, tol) == 0.0);
  CHECK_THROWS_AS(source_gauge(only_g, 2, 0.8, disc, 0.0),
                  std::invalid_argument);
}
