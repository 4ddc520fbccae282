#pragma once

#include <span>
#include <string>
#include <vector>

#include "orlicz/ball.hpp"
#include "orlicz/pde.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

// C^1 power truncation used as the iteration test function: F(x) = x^q for
// x <= level, continued linearly (matching slope) above. gauge is the
// additive shift applied to |u| before truncating.
struct TruncationSpec {
  double gauge = 0.0;
  double level = 1.0;
  double q = 1.0;

  double value(double x) const;
  double deriv(double x) const;
};

// One Caccioppoli-type energy test on an annular cutoff: eta is the C^1
// smoothstep equal to 1 on B_{h_inner} and 0 outside B_{h_outer},
// v = F(|u| + gauge). Verifies
//   ||eta v'||_n^n <= n a I_a + n q^{n-1} I_b + I_c + C q^n I_d
// with the four coupling integrals reported individually.
struct EnergyReport {
  double lhs = 0.0;
  double term_a = 0.0;  // n a int |eta' v| |eta v'|^{n-1}
  double term_b = 0.0;  // n q^{n-1} int bbar |eta v|^{n-1} |eta' v|
  double term_c = 0.0;  // int cbar |eta v| |eta v'|^{n-1}
  double term_d = 0.0;  // C q^n int dbar |eta v|^n
  double rhs = 0.0;
  double margin = 0.0;
};
EnergyReport energy_check(const PdeProblem& prob, const CoefficientSet& coef,
                          const TruncationSpec& trunc, double h_inner,
                          double h_outer, double tol);

// Iterated exponential-class gauges A_j = ||ubar||_{E_{n q_j}} on shrinking
// balls B_{h_{j+1}}, q_j = r^{-j}, h_j = R (1 + 2^{-j}), run until q_j
// exceeds q_cap. ubar = u + gauge. The two measured constants compare the
// final trace against sup u on B_R and against the gradient norm.
struct IterationStep {
  int j = 0;
  double q = 1.0;
  double h = 0.0;
  double norm = 0.0;
};
struct IterationTrace {
  std::vector<IterationStep> steps;
  double base_norm = 0.0;  // ||ubar||_{E_{n r}} on B_{2R}
  double sup_grid = 0.0;   // grid sup of u on B_R
  double grad_norm = 0.0;  // ||u'||_n on B_R
  double c_sup = 0.0;      // sup / (R^{-1/(1-r)} (base_norm + gauge))
  double c_grad = 0.0;     // grad_norm R / (base_norm + gauge)
  bool finite = true;
  std::string stop_reason;
};
IterationTrace moser_trace(const RadialProfile& u, const Ball& domain,
                           double R, double r, double gauge, double tol,
                           double q_cap = 256.0);

// High-q exponential-class gauges approach the sup norm. For each q the
// certified sup bound is min over a threshold grid of
//   delta + A_q log(1 + 1/|{|f| > sup - delta}|)^{(n-1)/q},
// valid because the gauge dominates each superlevel set's plateau. eta is
// the relative gap between that certificate and A_q.
struct ExpLimitRow {
  double q = 0.0;
  double norm = 0.0;
  double certified_sup = 0.0;
  double eta = 0.0;
};
struct ExpLimitReport {
  std::vector<ExpLimitRow> rows;
  double grid_sup = 0.0;
  bool infinite = false;  // a gauge diverged (log-singular profile)
};
ExpLimitReport exp_limit_check(const RadialProfile& f, const Ball& ball,
                               std::span<const double> q_list, double tol);

}  // namespace orlicz
