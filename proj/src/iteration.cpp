#include "orlicz/iteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/norms.hpp"
#include "orlicz/quadrature.hpp"
#include "orlicz/rearrangement.hpp"

namespace orlicz {

double TruncationSpec::value(double x) const {
  if (x <= level) return std::pow(x, q);
  return q * std::pow(level, q - 1.0) * x - (q - 1.0) * std::pow(level, q);
}

double TruncationSpec::deriv(double x) const {
  if (x <= level) return q * std::pow(x, q - 1.0);
  return q * std::pow(level, q - 1.0);
}

namespace {

constexpr double kEnergyConstant = 1.0;

// C^1 smoothstep cutoff: 1 on [0, inner], 0 beyond outer.
struct Cutoff {
  double inner, outer;
  double value(double rho) const {
    if (rho <= inner) return 1.0;
    if (rho >= outer) return 0.0;
    double s = (rho - inner) / (outer - inner);
    return 1.0 - s * s * (3.0 - 2.0 * s);
  }
  double deriv(double rho) const {
    if (rho <= inner || rho >= outer) return 0.0;
    double s = (rho - inner) / (outer - inner);
    return -6.0 * s * (1.0 - s) / (outer - inner);
  }
};

double opt_value(const std::optional<RadialProfile>& f, double rho) {
  return f ? f->value(rho) : 0.0;
}

}  // namespace

EnergyReport energy_check(const PdeProblem& prob, const CoefficientSet& coef,
                          const TruncationSpec& trunc, double h_inner,
                          double h_outer, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("energy_check: tol > 0");
  if (!(h_inner > 0.0 && h_inner < h_outer))
    throw std::invalid_argument("energy_check: need 0 < h_inner < h_outer");
  if (h_outer > prob.domain.radius * (1.0 + 1e-12))
    throw std::invalid_argument("energy_check: cutoff exceeds the domain");
  const bool has_zero_order = coef.e || coef.f || coef.g;
  if (trunc.gauge <= 0.0 && has_zero_order)
    throw std::invalid_argument(
        "energy_check: zero-order data requires a positive gauge");
  const int n = prob.n;
  const double q = trunc.q;
  const double k = trunc.gauge;
  Cutoff eta{h_inner, h_outer};
  Ball cap = prob.domain.with_radius(h_outer);

  auto ubar = [&](double rho) {
    return std::abs(prob.u.value(rho)) + k;
  };
  auto v = [&](double rho) { return trunc.value(ubar(rho)); };
  auto dv = [&](double rho) {
    double sgn = prob.u.value(rho) >= 0.0 ? 1.0 : -1.0;
    return trunc.deriv(ubar(rho)) * sgn * prob.u.deriv(rho);
  };
  // modified zero-order coefficients absorbing e, f, g into b, d
  auto bbar = [&](double rho) {
    double base = opt_value(coef.b, rho);
    if (coef.e) base += std::pow(k, 1.0 - n) * coef.e->value(rho);
    return base;
  };
  auto dbar = [&](double rho) {
    double base = opt_value(coef.d, rho);
    if (coef.f) base += std::pow(k, 1.0 - n) * coef.f->value(rho);
    if (coef.g) base += std::pow(k, -double(n)) * coef.g->value(rho);
    return base;
  };

  std::vector<double> cuts = prob.u.interior_breakpoints(h_outer);
  for (double b : prob.potential.interior_breakpoints(h_outer))
    cuts.push_back(b);
  cuts.push_back(h_inner);
  for (double c : profiles::level_crossings(prob.u, trunc.level - k))
    if (c < h_outer) cuts.push_back(c);
  for (auto* f : {&coef.b, &coef.c, &coef.d, &coef.e, &coef.f, &coef.g})
    if (*f)
      for (double b : (*f)->interior_breakpoints(h_outer)) cuts.push_back(b);

  auto integral = [&](auto&& g) {
    IntegralResult ir = radial_integral(g, cap, tol, cuts);
    return ir.divergent ? std::numeric_limits<double>::infinity() : ir.value;
  };

  EnergyReport rep;
  rep.lhs = integral([&](double rho) {
    return std::pow(std::abs(eta.value(rho) * dv(rho)), double(n));
  });
  rep.term_a = n * coef.a * integral([&](double rho) {
    return std::abs(eta.deriv(rho) * v(rho)) *
           std::pow(std::abs(eta.value(rho) * dv(rho)), n - 1.0);
  });
  rep.term_b = n * std::pow(q, n - 1.0) * integral([&](double rho) {
    return bbar(rho) * std::pow(std::abs(eta.value(rho) * v(rho)), n - 1.0) *
           std::abs(eta.deriv(rho) * v(rho));
  });
  rep.term_c = integral([&](double rho) {
    return opt_value(coef.c, rho) * std::abs(eta.value(rho) * v(rho)) *
           std::pow(std::abs(eta.value(rho) * dv(rho)), n - 1.0);
  });
  rep.term_d = kEnergyConstant * std::pow(q, double(n)) * integral([&](double rho) {
    return dbar(rho) * std::pow(std::abs(eta.value(rho) * v(rho)), double(n));
  });
  rep.rhs = rep.term_a + rep.term_b + rep.term_c + rep.term_d;
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

IterationTrace moser_trace(const RadialProfile& u, const Ball& domain,
                           double R, double r, double gauge, double tol,
                           double q_cap) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("moser_trace: 0 < r < 1 required");
  if (!(R > 0.0) || 2.0 * R > domain.radius * (1.0 + 1e-12))
    throw std::invalid_argument("moser_trace: need B_{2R} inside the domain");
  if (!(gauge >= 0.0)) throw std::invalid_argument("moser_trace: gauge >= 0");
  if (!(tol > 0.0)) throw std::invalid_argument("moser_trace: tol > 0");

  IterationTrace trace;
  RadialProfile ubar = profiles::shift(u, gauge);
  Ball b2R = domain.with_radius(2.0 * R);
  auto base = exp_norm(ubar, domain.n * r, b2R, tol);
  if (!base.is_finite()) {
    trace.finite = false;
    trace.stop_reason = "base gauge diverged";
    return trace;
  }
  trace.base_norm = base.value;
  trace.sup_grid = profiles::grid_sup(u, 0.0, R, 20000);
  {
    std::vector<double> cuts = u.interior_breakpoints(R);
    Ball bR = domain.with_radius(R);
    IntegralResult ir = radial_integral(
        [&](double rho) {
          return std::pow(std::abs(u.deriv(rho)), double(domain.n));
        },
        bR, tol, cuts);
    trace.grad_norm = ir.divergent
                          ? std::numeric_limits<double>::infinity()
                          : std::pow(ir.value, 1.0 / domain.n);
  }

  double prev = trace.base_norm;
  for (int j = 0;; ++j) {
    double q = std::pow(r, -double(j));
    if (q > q_cap) {
      trace.stop_reason = "power cap reached";
      break;
    }
    double h = R * (1.0 + std::pow(2.0, -double(j + 1)));
    auto step = exp_norm(ubar, domain.n * q, domain.with_radius(h), tol);
    if (!step.is_finite()) {
      trace.finite = false;
      trace.stop_reason = "iterated gauge diverged";
      break;
    }
    trace.steps.push_back({j, q, h, step.value});
    if (j > 0 && std::abs(step.value - prev) < 1e-12 * prev) {
      trace.stop_reason = "stalled";
      break;
    }
    prev = step.value;
    if (j > 400) {
      trace.stop_reason = "iteration guard";
      break;
    }
  }
  double denom = trace.base_norm + gauge;
  if (denom > 0.0) {
    trace.c_sup = trace.sup_grid /
                  (std::pow(R, -1.0 / (1.0 - r)) * denom);
    trace.c_grad = trace.grad_norm * R / denom;
  }
  return trace;
}

ExpLimitReport exp_limit_check(const RadialProfile& f, const Ball& ball,
                               std::span<const double> q_list, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("exp_limit_check: tol > 0");
  ExpLimitReport rep;
  RadialSamples samples = RadialSamples::from_profile(f, ball, 200000);
  rep.grid_sup = 0.0;
  for (double v : samples.values) rep.grid_sup = std::max(rep.grid_sup, v);

  for (double q : q_list) {
    ExpLimitRow row;
    row.q = q;
    auto nr = exp_norm(f, q, ball, tol);
    if (!nr.is_finite()) {
      rep.infinite = true;
      row.norm = std::numeric_limits<double>::infinity();
      row.certified_sup = std::numeric_limits<double>::infinity();
      row.eta = std::numeric_limits<double>::infinity();
      rep.rows.push_back(row);
      continue;
    }
    row.norm = nr.value;
    // sup <= delta + A_q log(1 + 1/|{f > sup - delta}|)^{(n-1)/q}: minimize
    // the right side over a logarithmic grid of thresholds delta
    double best = std::numeric_limits<double>::infinity();
    const double sup = rep.grid_sup;
    for (int i = 0; i <= 60; ++i) {
      double delta = sup * std::pow(10.0, -6.0 + 5.7 * i / 60.0);
      double meas = distribution_function(samples, sup - delta);
      if (!(meas > 0.0)) continue;
      double bound =
          delta + row.norm * std::pow(std::log1p(1.0 / meas),
                                      (ball.n - 1.0) / q);
      best = std::min(best, bound);
    }
    row.certified_sup = best;
    row.eta = best / row.norm - 1.0;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace orlicz
