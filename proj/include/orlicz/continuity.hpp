#pragma once

#include <functional>
#include <span>
#include <vector>

#include "orlicz/ball.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

// Gauge-shrinking estimate on small balls: for eps' = (1-r)/2,
//   ||h||_{(N_{r+eps'}), B_R} <= C |log(1/R)|^{-eps'} ||h||_{(N_r), B_R}
// for R below 3^{-10}. Each row records both sides, the gain factor
// G = |log(1/R)|^{-eps'}, and the measured constant lhs / (G rhs).
struct ShrinkRow {
  double R = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gain = 0.0;
  double measured_constant = 0.0;
};
std::vector<ShrinkRow> shrink_check(const RadialProfile& h, int n, double r,
                                    std::span<const double> radii, double tol);

// Oscillation recursion omega_m = theta omega_{m-1} + tau kbar(R 3^{1-m}):
// contraction by theta plus a perturbation sampled from a nonincreasing
// inhomogeneity gauge kbar at geometrically shrinking radii.
struct OscillationParams {
  double theta = 0.5;                       // contraction factor in (0, 1)
  double tau = 0.0;                         // perturbation coupling >= 0
  double gamma = 0.0;                       // decay exponent of kbar
  double omega0 = 1.0;                      // initial oscillation
  double R = 1e-5;                          // start radius
  int m_max = 80;
  std::function<double(double)> kbar;       // nonincreasing in rho; may be null
};

struct OscillationResult {
  std::vector<double> omega;   // omega_0 .. omega_{m_max}
  double k_index = 0.0;        // max_{m >= 10} omega_m m^gamma
  double k_log = 0.0;          // max_{m >= 1} omega_m |log(R 3^{-m})|^gamma
  double slope = 0.0;          // LS slope of log omega_m vs log m, m in [20, 60]
  bool slope_valid = false;
};
OscillationResult oscillation_recursion(const OscillationParams& params);

}  // namespace orlicz
