#pragma once

#include <vector>

#include "orlicz/ball.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

// Radial solution pair (u, V) on the unit ball of R^n exhibiting sharpness
// of the logarithmic regularity theory: u glues an interior power cap
// a - b rho^{n/(n-1)} to the outer profile log(1/rho) at rho = eps, with a,
// b chosen to make the glue C^1; V is the matching bounded potential,
// supported on the inner cap, with V identically 0 outside. As eps -> 0 the
// potential stays bounded in the log-type gauge while sup u / inf u over any
// fixed interior ball grows like log(1/eps).
struct CounterexampleSolution {
  int n;
  double eps;
  double a;  // cap height: (n-1)/n + log(1/eps)
  double b;  // cap curvature: (n-1)/n * eps^{-n/(n-1)}
  RadialProfile u;
  RadialProfile potential;
  Ball domain;
};

// eps in (1e-8, 1/8) exclusive; parameters outside that window throw.
CounterexampleSolution build_counterexample(int n, double eps);

// Scalar diagnostics quantifying sharpness for one (eps, r):
//   sup_u, inf_b18    extrema of u over the inner ball of radius 1/8
//   ratio_b           their quotient, the growing Harnack-type ratio
//   norm_v_log_gauge  log-type Luxemburg gauge of V with parameter r
//   int_log_gauge_v   modular int_B N_r(V) dx, bounded uniformly in eps
//   norm_u_exp_gauge  exponential-class gauge of u with s = n r on B_1
//   ratio_a           sup_{B_{1/2}} u / norm_u_exp_gauge, also growing
struct SharpnessReport {
  double eps, r;
  double a, b;
  double sup_u, inf_b18, ratio_b;
  double norm_v_log_gauge, int_log_gauge_v;
  double norm_u_exp_gauge, ratio_a;
};

SharpnessReport sharpness_metrics(const CounterexampleSolution& sol, double r,
                                  double tol);

// Cartesian sweep, eps outer loop, r inner loop, deterministic order.
std::vector<SharpnessReport> sharpness_sweep(int n,
                                             const std::vector<double>& eps_list,
                                             const std::vector<double>& r_list,
                                             double tol);

}  // namespace orlicz
