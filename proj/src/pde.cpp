#include "orlicz/pde.hpp"

#include <cmath>
#include <stdexcept>

#include "orlicz/norms.hpp"
#include "orlicz/quadrature.hpp"

namespace orlicz {

namespace {

double radial_n_lap(double d1, double d2, int n, double rho) {
  double lap2 = d2 + d1 / rho;
  if (n == 2) return lap2;
  double mag = std::abs(d1);
  if (mag == 0.0) return 0.0;
  return (n - 1.0) * std::pow(mag, n - 2.0) * lap2;
}

}  // namespace

double n_laplacian(const RadialProfile& u, int n, double rho, Side side) {
  if (!(rho > 0.0))
    throw std::domain_error("n_laplacian: rho must be positive");
  return radial_n_lap(u.deriv_side(rho, side), u.second_side(rho, side), n,
                      rho);
}

double n_laplacian(const RadialProfile& u, int n, double rho) {
  if (!(rho > 0.0))
    throw std::domain_error("n_laplacian: rho must be positive");
  for (double b : u.interior_breakpoints(u.domain_max()))
    if (std::abs(rho - b) <= 1e-14 * std::max(1.0, b))
      throw std::domain_error(
          "n_laplacian: one-sided evaluation required at a breakpoint");
  return radial_n_lap(u.deriv(rho), u.second(rho), n, rho);
}

ResidualReport strong_residual(const PdeProblem& prob, int grid_points) {
  if (grid_points < 8)
    throw std::invalid_argument("strong_residual: grid too small");
  ResidualReport rep;
  const double R = prob.domain.radius;
  for (int i = 0; i < grid_points; ++i) {
    double rho = R * (i + 0.5) / grid_points;
    bool near_break = false;
    for (double b : prob.u.interior_breakpoints(R))
      if (std::abs(rho - b) <= 1e-12 * std::max(1.0, b)) near_break = true;
    if (near_break) continue;
    double lap = n_laplacian(prob.u, prob.n, rho);
    double uu = prob.u.value(rho);
    double rhs = prob.potential.value(rho) *
                 std::pow(std::abs(uu), prob.n - 2.0) * uu;
    double resid = std::abs(-lap - rhs);
    rep.scale = std::max(rep.scale, std::abs(rhs));
    if (resid > rep.max_abs) {
      rep.max_abs = resid;
      rep.at_rho = rho;
    }
  }
  return rep;
}

WeakFormReport weak_residual(const PdeProblem& prob, const RadialProfile& phi,
                             double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("weak_residual: tol > 0");
  const double R = prob.domain.radius;
  if (std::abs(phi.value(R)) > 1e-10)
    throw std::invalid_argument(
        "weak_residual: test profile must vanish at the boundary");
  std::vector<double> cuts = prob.u.interior_breakpoints(R);
  for (double b : prob.potential.interior_breakpoints(R)) cuts.push_back(b);
  for (double b : phi.interior_breakpoints(R)) cuts.push_back(b);

  // radial weak form: int (phi' |u'|^{n-2} u' - phi V |u|^{n-2} u) dx,
  // zero when u solves -div(|u'|^{n-2} u') = V u^{n-1} against phi
  auto flux_part = [&](double rho) {
    double du = prob.u.deriv(rho);
    return phi.deriv(rho) * std::pow(std::abs(du), prob.n - 2.0) * du;
  };
  auto source_part = [&](double rho) {
    double uu = prob.u.value(rho);
    return phi.value(rho) * prob.potential.value(rho) *
           std::pow(std::abs(uu), prob.n - 2.0) * uu;
  };
  auto total = radial_integral(
      [&](double rho) { return flux_part(rho) - source_part(rho); },
      prob.domain, tol, cuts);
  auto mag = radial_integral(
      [&](double rho) {
        return std::abs(flux_part(rho)) + std::abs(source_part(rho));
      },
      prob.domain, tol, cuts);
  return WeakFormReport{total.value, mag.value};
}

StructureReport structure_check(const PdeProblem& prob,
                                const CoefficientSet& coef,
                                std::span<const double> sample_rhos,
                                double tol) {
  StructureReport rep;
  rep.flux_margin = rep.source_margin = rep.coercivity_margin = 1e300;
  auto at = [](const std::optional<RadialProfile>& f, double rho) {
    return f ? f->value(rho) : 0.0;
  };
  const int n = prob.n;
  for (double rho : sample_rhos) {
    double uu = prob.u.value(rho);
    double du = prob.u.deriv(rho);
    double pn1 = std::pow(std::abs(du), n - 1.0);
    double un1 = std::pow(std::abs(uu), n - 1.0);
    // model flux |p|^{n-2} p and model source V u^{n-1}
    double flux_mag = pn1;
    double source_mag = std::abs(prob.potential.value(rho)) * un1;
    double m1 = coef.a * pn1 + at(coef.b, rho) * un1 + at(coef.e, rho) -
                flux_mag;
    double m2 = at(coef.c, rho) * pn1 + at(coef.d, rho) * un1 +
                at(coef.f, rho) - source_mag;
    double pdotA = std::pow(std::abs(du), double(n));
    double m3 = pdotA - (std::pow(std::abs(du), double(n)) -
                         at(coef.d, rho) * std::pow(std::abs(uu), double(n)) -
                         at(coef.g, rho));
    rep.flux_margin = std::min(rep.flux_margin, m1);
    rep.source_margin = std::min(rep.source_margin, m2);
    rep.coercivity_margin = std::min(rep.coercivity_margin, m3);
    double scale = std::max({1.0, pn1, source_mag});
    if (m1 < -tol * scale || m2 < -tol * scale || m3 < -tol * scale)
      rep.violations.push_back(rho);
  }
  return rep;
}

double source_gauge(const CoefficientSet& coef, int n, double s,
                    const Ball& ball, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("source_gauge: tol > 0");
  OrliczFunction N(OrliczKind::kLogType, n, s);
  auto gauge_of = [&](const std::optional<RadialProfile>& f,
                      double power) -> double {
    if (!f) return 0.0;
    RadialProfile lifted = power == 1.0
                               ? *f
                               : profiles::power_map(*f, power);
    return luxemburg_norm(lifted, N, ball, tol).value;
  };
  double ne = gauge_of(coef.e, double(n) / (n - 1.0));
  double nf = gauge_of(coef.f, 1.0);
  double ng = gauge_of(coef.g, 1.0);
  return std::pow(std::pow(ne, (n - 1.0) / n) + nf, 1.0 / (n - 1.0)) +
         std::pow(ng, 1.0 / double(n));
}

}  // namespace orlicz
