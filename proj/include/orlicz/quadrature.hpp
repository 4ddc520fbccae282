#pragma once

#include <functional>
#include <span>
#include <vector>

#include "orlicz/ball.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

struct IntegralResult {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = false;
  // Set when partial sums exceed the divergence cap or an integrand sample
  // is non-finite; value is then a lower-bound estimate or +infinity.
  bool divergent = false;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_floor = 1e-14;
  int max_intervals = 4000;
  double divergence_cap = 1e12;
  // extra initial subdivision points (integrand kinks, profile breakpoints)
  std::vector<double> split_points;
  // seed intervals accumulating geometrically toward the left endpoint,
  // resolving integrable singularities and sharp features near 0
  bool geometric_left_seeds = false;
};

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b]. All nodes
// are interior, so endpoint singularities are never sampled directly.
// Deterministic: no randomness, single-threaded.
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureOptions& opt = {});

// integral over the ball of a radial integrand g(rho), i.e.
// sigma * int_0^R g(rho) rho^{n-1} drho, with geometric seeding toward 0.
IntegralResult radial_integral(const std::function<double(double)>& g,
                               const Ball& ball,
                               double rel_tol,
                               std::span<const double> breakpoints = {});

// Fixed 15-point Gauss-Legendre rule on [a, b] (non-adaptive helper).
double gauss_legendre_15(const std::function<double(double)>& f, double a,
                         double b);

}  // namespace orlicz
