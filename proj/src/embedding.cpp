#include "orlicz/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

double implicit_power_bound(std::span<const double> alphas,
                            std::span<const double> betas, double delta) {
  if (alphas.size() != betas.size() || alphas.empty())
    throw std::invalid_argument("implicit_power_bound: mismatched terms");
  const double N = static_cast<double>(alphas.size());
  double bound = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(betas[i] < delta))
      throw std::invalid_argument(
          "implicit_power_bound: exponents must stay below delta");
    if (alphas[i] < 0.0)
      throw std::invalid_argument("implicit_power_bound: coefficients >= 0");
    double gamma = 1.0 / (delta - betas[i]);
    // z^delta <= N max_i alpha_i z^{beta_i} implies for the maximizing i:
    // z <= (N alpha_i)^{gamma_i}
    bound = std::max(bound, std::pow(N * alphas[i], gamma));
  }
  return bound;
}

FactorialSeries factorial_series(double r, double tol) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("factorial_series: 0 < r < 1 required");
  if (!(tol > 0.0)) throw std::invalid_argument("factorial_series: tol > 0");
  FactorialSeries out;
  double sum = 0.0;
  double prev = 0.0;
  int j = 1;
  for (; j < 100000; ++j) {
    double lg = std::lgamma(j * r + 1.0) / r - std::lgamma(j + 1.0);
    double term = std::exp(lg);
    sum += term;
    if (j > 2 && prev > 0.0) {
      double ratio = term / prev;
      if (ratio < 1.0) {
        // geometric tail bound: remaining mass <= term * ratio / (1 - ratio)
        double tail = term * ratio / (1.0 - ratio);
        if (tail <= tol * sum) {
          sum += tail;  // include the certified bound of the tail
          ++j;
          break;
        }
      }
    }
    prev = term;
  }
  out.sum = sum;
  out.terms = j;
  out.constant = std::max(1.0, std::pow(sum, r / (1.0 - r)));
  return out;
}

namespace {

double gradient_norm_n(const RadialProfile& u, const Ball& ball, double tol) {
  std::vector<double> cuts = u.interior_breakpoints(ball.radius);
  auto integrand = [&](double rho) {
    return std::pow(std::abs(u.deriv(rho)), double(ball.n));
  };
  IntegralResult ir = radial_integral(integrand, ball, tol, cuts);
  if (ir.divergent) return std::numeric_limits<double>::infinity();
  return std::pow(ir.value, 1.0 / ball.n);
}

}  // namespace

EmbeddingReport trudinger_check(const RadialProfile& u, const Ball& ball,
                                TrudingerMode mode, double r, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("trudinger_check: tol > 0");
  const int n = ball.n;
  EmbeddingReport rep;
  rep.grad_norm = gradient_norm_n(u, ball, tol);
  if (std::abs(u.value(ball.radius)) >
      1e-9 * std::max(1.0, rep.grad_norm))
    throw std::invalid_argument(
        "trudinger_check: profile must vanish at the boundary");
  const double cn = std::pow(ball.sigma() * std::pow(double(n), n - 1),
                             1.0 / n);
  if (mode == TrudingerMode::kDirichletEnergy) {
    rep.lhs = exp_norm(u, double(n), ball, tol).value;
    rep.rhs = std::pow(ball.measure() + 1.0, (n - 1.0) / n) / cn *
              rep.grad_norm;
  } else {
    if (!(r > 0.0 && r < 1.0))
      throw std::invalid_argument("trudinger_check: 0 < r < 1 required");
    const double delta = (n - 1.0) * (1.0 - r) / (n * r);
    const double cr = factorial_series(r).constant;
    rep.lhs = exp_norm(u, n * r, ball, tol).value;
    rep.rhs = std::pow(cr, delta) / cn *
              std::pow(std::log1p(std::pow(ball.measure(), -1.0 / (1.0 - r))),
                       -delta) *
              rep.grad_norm;
  }
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

MeanProductReport mean_product_check(const RadialProfile& w, const Ball& ball,
                                     double p, double beta_n, double cn_cal,
                                     double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("mean_product_check: tol > 0");
  if (!(p > 0.0)) throw std::invalid_argument("mean_product_check: p > 0");
  const int n = ball.n;
  std::vector<double> cuts = w.interior_breakpoints(ball.radius);
  // center w to zero mean; the bound is invariant under adding constants
  auto mean_ir = radial_integral([&](double rho) { return w.value(rho); },
                                 ball, tol, cuts);
  const double mean = mean_ir.value / ball.measure();
  const double gn = gradient_norm_n(w, ball, tol);
  const double T = std::max(gn, 1e-12);
  MeanProductReport rep;
  double osc = profiles::grid_sup(w, 0.0, ball.radius, 2048, false) -
               profiles::grid_inf(w, 0.0, ball.radius, 2048);
  if (gn == 0.0 && osc == 0.0) {
    // genuinely constant: centering zeroes the exponent exactly, and
    // dividing quadrature noise in the mean by the floor T must not be
    // allowed to manufacture a fake oscillation
    rep.factor_pos = rep.factor_neg = ball.measure();
  } else {
    auto exp_int = [&](double sign) {
      auto ir = radial_integral(
          [&](double rho) {
            return std::exp(sign * p * (w.value(rho) - mean) / T);
          },
          ball, tol, cuts);
      return ir.divergent ? std::numeric_limits<double>::infinity()
                          : ir.value;
    };
    rep.factor_pos = exp_int(1.0);
    rep.factor_neg = exp_int(-1.0);
  }
  rep.lhs = rep.factor_pos * rep.factor_neg;
  double expo = std::pow(T * p, double(n)) * std::pow(beta_n, 1.0 - n);
  double grow = expo > 700.0 ? std::numeric_limits<double>::infinity()
                             : std::exp(expo);
  rep.rhs = (cn_cal + grow) * ball.measure() * ball.measure();
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

}  // namespace orlicz
