#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orlicz/ball.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

// Structural coefficient bounds for quasilinear equations with n-growth:
//   |flux(x, u, p)|        <= a |p|^{n-1} + b(x) |u|^{n-1} + e(x)
//   |source(x, u, p)|      <= c(x) |p|^{n-1} + d(x) |u|^{n-1} + f(x)
//   p . flux(x, u, p)      >= |p|^n - d(x) |u|^n - g(x)
// Missing profiles mean identically zero. a is a plain constant.
struct CoefficientSet {
  double a = 1.0;
  std::optional<RadialProfile> b, c, d, e, f, g;
};

// Radial problem: u solves -div(|grad u|^{n-2} grad u) = V u^{n-1} weakly
// on the ball (model flux |p|^{n-2} p, model source V u^{n-1}).
struct PdeProblem {
  int n;
  RadialProfile u;
  RadialProfile potential;
  Ball domain;
};

// n-Laplacian of a radial C^2-by-pieces profile at rho > 0:
//   (n-1) |u'|^{n-2} (u'' + u'/rho).
// The plain overload throws at interior breakpoints (where only one-sided
// values exist); the Side overload evaluates one-sided.
double n_laplacian(const RadialProfile& u, int n, double rho);
double n_laplacian(const RadialProfile& u, int n, double rho, Side side);

struct ResidualReport {
  double max_abs = 0.0;   // max |{-}laplacian - V u^{n-1}| over the grid
  double at_rho = 0.0;    // argmax
  double scale = 0.0;     // max |V u^{n-1}|, the natural comparison scale
};

// Pointwise (strong-form) residual of -Lap_n u = V u^{n-1} on a midpoint
// grid that never lands on breakpoints.
ResidualReport strong_residual(const PdeProblem& prob, int grid_points = 20000);

// Weak-form residual int_B (phi' . |u'|^{n-2} u' - phi V u^{n-1}) dx for a
// C^1 test profile phi vanishing at the boundary; zero for weak solutions.
// scale carries the sum of the two absolute integrals for relative
// comparison.
struct WeakFormReport {
  double value = 0.0;
  double scale = 0.0;
};
WeakFormReport weak_residual(const PdeProblem& prob, const RadialProfile& phi,
                             double tol);

// Margins of the three structure inequalities along the solution at sample
// radii; negative margin (beyond -tolerance) is a violation.
struct StructureReport {
  double flux_margin = 0.0;
  double source_margin = 0.0;
  double coercivity_margin = 0.0;
  std::vector<double> violations;  // radii where any inequality failed
  bool ok(double tol = 1e-12) const {
    return violations.empty() ||
           (flux_margin > -tol && source_margin > -tol &&
            coercivity_margin > -tol);
  }
};
StructureReport structure_check(const PdeProblem& prob,
                                const CoefficientSet& coef,
                                std::span<const double> sample_rhos,
                                double tol = 1e-12);

// Inhomogeneity gauge aggregating the zero-order data of the structure
// bounds in the log-type Luxemburg norm with parameter s:
//   (||e^{n/(n-1)}||^{(n-1)/n} + ||f||)^{1/(n-1)} + ||g||^{1/n}.
double source_gauge(const CoefficientSet& coef, int n, double s,
                    const Ball& ball, double tol);

}  // namespace orlicz
