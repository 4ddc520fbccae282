#include "orlicz/counterexample.hpp"

#include <cmath>
#include <stdexcept>

#include "orlicz/norms.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

CounterexampleSolution build_counterexample(int n, double eps) {
  if (n < 2) throw std::invalid_argument("build_counterexample: n >= 2");
  if (!(eps > 1e-8) || !(eps < 0.125))
    throw std::invalid_argument(
        "build_counterexample: eps must lie in (1e-8, 1/8)");
  const double q = double(n) / (n - 1.0);
  const double a = (n - 1.0) / n + std::log(1.0 / eps);
  const double b = (n - 1.0) / n * std::pow(eps, -q);

  profiles::Builder bu;
  bu.append(0.0, eps, profiles::make_power_piece(a, b, q));
  bu.append(eps, 1.0, profiles::make_log_piece(1.0));
  RadialProfile u = std::move(bu).finish(Continuity::kC1);
  u.validate(1e-10);

  // V = n eps^{-n} / u^{n-1} on the cap; 0 outside. On the cap u >= -log eps
  // > 0, so the power is safe.
  const double K = n * std::pow(eps, -double(n));
  auto cap_u = [a, b, q](double rho) { return a - b * std::pow(rho, q); };
  auto cap_du = [b, q](double rho) { return -b * q * std::pow(rho, q - 1.0); };
  auto cap_d2u = [b, q](double rho) {
    return -b * q * (q - 1.0) * std::pow(rho, q - 2.0);
  };
  Piece vpiece{
      [K, n, cap_u](double rho) { return K / std::pow(cap_u(rho), n - 1.0); },
      [K, n, cap_u, cap_du](double rho) {
        double uu = cap_u(rho);
        return K * (1.0 - n) * std::pow(uu, -double(n)) * cap_du(rho);
      },
      [K, n, cap_u, cap_du, cap_d2u](double rho) {
        double uu = cap_u(rho), du = cap_du(rho);
        return K * (1.0 - n) *
               (-double(n) * std::pow(uu, -double(n) - 1.0) * du * du +
                std::pow(uu, -double(n)) * cap_d2u(rho));
      }};
  profiles::Builder bv;
  bv.append(0.0, eps, vpiece);
  bv.append_constant(eps, 1.0, 0.0);
  RadialProfile V = std::move(bv).finish(Continuity::kPiecewise);

  return CounterexampleSolution{n, eps, a, b, std::move(u), std::move(V),
                                Ball(n, 1.0)};
}

SharpnessReport sharpness_metrics(const CounterexampleSolution& sol, double r,
                                  double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("sharpness_metrics: tol > 0");
  if (!(r > 0.0)) throw std::invalid_argument("sharpness_metrics: r > 0");
  SharpnessReport rep{};
  rep.eps = sol.eps;
  rep.r = r;
  rep.a = sol.a;
  rep.b = sol.b;
  rep.sup_u = profiles::grid_sup(sol.u, 0.0, 0.125);
  rep.inf_b18 = profiles::grid_inf(sol.u, 0.0, 0.125);
  rep.ratio_b = rep.sup_u / rep.inf_b18;

  OrliczFunction N(OrliczKind::kLogType, sol.n, r);
  rep.norm_v_log_gauge =
      luxemburg_norm(sol.potential, N, sol.domain, tol).value;
  auto modular = radial_integral(
      [&](double rho) { return N.value(std::abs(sol.potential.value(rho))); },
      sol.domain, tol,
      sol.potential.interior_breakpoints(sol.domain.radius));
  rep.int_log_gauge_v = modular.value;

  rep.norm_u_exp_gauge = exp_norm(sol.u, sol.n * r, sol.domain, tol).value;
  double sup_half = profiles::grid_sup(sol.u, 0.0, 0.5);
  rep.ratio_a = sup_half / rep.norm_u_exp_gauge;
  return rep;
}

std::vector<SharpnessReport> sharpness_sweep(
    int n, const std::vector<double>& eps_list,
    const std::vector<double>& r_list, double tol) {
  std::vector<SharpnessReport> out;
  out.reserve(eps_list.size() * r_list.size());
  for (double eps : eps_list) {
    CounterexampleSolution sol = build_counterexample(n, eps);
    for (double r : r_list) out.push_back(sharpness_metrics(sol, r, tol));
  }
  return out;
}

}  // namespace orlicz
