#pragma once

#include <span>

#include "orlicz/ball.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

// Closed-form consequence of an implicit power inequality: if z >= 0
// satisfies z^delta <= sum_i alpha_i z^{beta_i} with all beta_i < delta,
// then z <= max_i N^{gamma_i} max(... ) with gamma_i = 1/(delta - beta_i);
// returns the explicit bound C * max over terms, where N is the number of
// terms. Throws if some beta_i >= delta.
double implicit_power_bound(std::span<const double> alphas,
                            std::span<const double> betas, double delta);

// S(r) = sum_{j>=1} Gamma(j r + 1)^{1/r} / j!   (computed in log space),
// truncated once a geometric tail bound certifies the requested tolerance.
// constant() = max(1, S^{r/(1-r)}) is the interpolation constant used by
// the mode-A embedding below. Requires 0 < r < 1.
struct FactorialSeries {
  double sum = 0.0;
  double constant = 0.0;
  int terms = 0;
};
FactorialSeries factorial_series(double r, double tol = 1e-12);

// Two modes of the exponential-class Sobolev embedding on a ball:
//  kDirichletEnergy: ||u||_{E_n} <= Cn^{-1} (|B|+1)^{(n-1)/n} ||u'||_n
//      with Cn = (sigma n^{n-1})^{1/n}
//  kInterpolated:    ||u||_{E_{n r}} <= (C_r^delta / Cn)
//      log(1 + |B|^{-1/(1-r)})^{-delta} ||u'||_n,
//      delta = (n-1)(1-r)/(n r), C_r from factorial_series(r)
enum class TrudingerMode { kDirichletEnergy, kInterpolated };

struct EmbeddingReport {
  double lhs = 0.0;       // exponential-class gauge of u
  double rhs = 0.0;       // constant times the gradient norm
  double margin = 0.0;    // rhs - lhs, nonnegative when the bound holds
  double grad_norm = 0.0;
};

// Requires u(R) = 0 (boundary trace zero) within 1e-9 of the gradient
// scale; r is ignored in kDirichletEnergy mode.
EmbeddingReport trudinger_check(const RadialProfile& u, const Ball& ball,
                                TrudingerMode mode, double r, double tol);

// Mean-product bound: for w with int_B w dx = 0 (enforced by centering),
//   (int_B e^{p w / T} dx) (int_B e^{-p w / T} dx)
//     <= (cn_cal + e^{(T p)^n beta_n^{1-n}}) |B|^2
// where T = max(||w'||_n, floor). beta_n, cn_cal come from the shipped
// calibration table.
struct MeanProductReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double factor_pos = 0.0;
  double factor_neg = 0.0;
  double margin = 0.0;
};
MeanProductReport mean_product_check(const RadialProfile& w, const Ball& ball,
                                     double p, double beta_n, double cn_cal,
                                     double tol);

}  // namespace orlicz
