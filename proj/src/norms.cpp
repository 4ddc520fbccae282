#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "orlicz/quadrature.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NormResult zero_result(double tol) {
  NormResult r;
  r.status = NormStatus::kZero;
  r.tol = tol;
  return r;
}

NormResult infinite_result(double tol, DivergenceReason why) {
  NormResult r;
  r.value = kInf;
  r.bracket_lo = kInf;
  r.bracket_hi = kInf;
  r.functional_at_value = kInf;
  r.status = NormStatus::kInfinite;
  r.reason = why;
  r.tol = tol;
  return r;
}

// Solve J(lambda) = 1 downward-crossing for a continuous nonincreasing J
// with J(0+) > 1. Returns the admissible upper bracket end as the norm.
NormResult solve_gauge(const std::function<double(double)>& J, double lam0,
                       double tol) {
  double lo = lam0 * 1e-3, hi = lam0 * 1e3;
  double Jhi = J(hi);
  int guard = 0;
  while (Jhi > 1.0 && hi < 1e300 && guard++ < 400) {
    lo = hi;
    hi *= 8.0;
    Jhi = J(hi);
  }
  if (Jhi > 1.0) return infinite_result(tol, DivergenceReason::kNumericOverflow);
  guard = 0;
  double Jlo = J(lo);
  while (Jlo <= 1.0 && lo > 1e-300 && guard++ < 400) {
    hi = std::min(hi, lo);
    Jhi = Jlo;
    lo /= 8.0;
    Jlo = J(lo);
  }
  if (Jlo <= 1.0) {
    // gauge integral stays <= 1 down to the smallest representable scale
    return zero_result(tol);
  }
  // log-space bisection; keep J(hi) <= 1 < J(lo) invariant
  for (int it = 0; it < 900; ++it) {
    bool narrow = (hi - lo) <= tol * hi;
    bool certified = std::abs(Jhi - 1.0) <= 10.0 * tol;
    if (narrow && certified) break;
    if ((hi - lo) <= 8.0 * std::numeric_limits<double>::epsilon() * hi) break;
    double mid = std::sqrt(lo * hi);
    double Jm = J(mid);
    if (Jm <= 1.0) {
      hi = mid;
      Jhi = Jm;
    } else {
      lo = mid;
    }
  }
  NormResult r;
  r.value = hi;
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.tol = tol;
  r.functional_at_value = Jhi;
  r.status = NormStatus::kFinite;
  return r;
}

double initial_scale(double sup_abs, const OrliczFunction& phi,
                     const Ball& ball) {
  if (!std::isfinite(sup_abs) || sup_abs <= 0.0) return 1.0;
  double inv = phi.inverse(1.0 / ball.measure());
  if (!(inv > 0.0) || !std::isfinite(inv)) return 1.0;
  return sup_abs / inv;
}

}  // namespace

bool divergence_certified(const RadialProfile& f, const OrliczFunction& phi) {
  if (!f.unbounded_at_zero()) return false;
  if (phi.kind == OrliczKind::kLogType || phi.kind == OrliczKind::kAlternative)
    return false;  // log-type integrands grow polynomially: always integrable
  return phi.exp_exponent() > 1.0;
}

NormResult luxemburg_norm(const RadialProfile& f, const OrliczFunction& phi,
                          const Ball& ball, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("luxemburg_norm: tol > 0");
  if (phi.kind == OrliczKind::kAlternative)
    throw std::invalid_argument("luxemburg_norm: use alt_norm for the amalgam kind");
  if (ball.radius > f.domain_max() * (1.0 + 1e-12))
    throw std::invalid_argument("luxemburg_norm: profile domain smaller than ball");
  double sup_abs = profiles::grid_sup(f, 0.0, ball.radius, 4096, true);
  if (sup_abs == 0.0) return zero_result(tol);
  if (divergence_certified(f, phi))
    return infinite_result(tol, DivergenceReason::kAnalyticTail);

  std::vector<double> brk = f.interior_breakpoints(ball.radius);
  auto J = [&](double lambda) {
    auto integrand = [&](double rho) {
      return phi.value(std::abs(f.value(rho)) / lambda);
    };
    IntegralResult ir = radial_integral(integrand, ball, tol / 10.0, brk);
    if (ir.divergent) return kInf;
    return ir.value;
  };
  return solve_gauge(J, initial_scale(sup_abs, phi, ball), tol);
}

NormResult exp_norm(const RadialProfile& f, double s, const Ball& ball,
                    double tol, bool via_substitution) {
  OrliczFunction phi(OrliczKind::kExponential, ball.n, s);
  if (!via_substitution) return luxemburg_norm(f, phi, ball, tol);

  if (!(tol > 0.0)) throw std::invalid_argument("exp_norm: tol > 0");
  if (divergence_certified(f, phi))
    return infinite_result(tol, DivergenceReason::kAnalyticTail);
  // substitution route needs |f| nonincreasing in rho
  {
    double prev = kInf;
    for (int i = 0; i <= 512; ++i) {
      double rho = ball.radius * i / 512.0;
      double v = std::abs(f.value(rho));
      if (std::isfinite(prev) && v > prev + 1e-9 * std::max(1.0, prev))
        throw std::invalid_argument("exp_norm: substitution route requires a nonincreasing profile");
      if (std::isfinite(v)) prev = v;
    }
  }
  const int n = ball.n;
  const double R = ball.radius;
  const double measure = ball.measure();
  const double cn = std::pow(ball.sigma() * std::pow(double(n), n - 1), 1.0 / n);
  double sup_abs = profiles::grid_sup(f, 0.0, R, 4096, true);
  if (sup_abs == 0.0) return zero_result(tol);

  // breakpoints rho_i map to t_i = n log(R / rho_i)
  std::vector<double> tcuts;
  for (double b : f.interior_breakpoints(R))
    tcuts.push_back(double(n) * std::log(R / b));

  auto J = [&](double lambda) {
    auto omega = [&](double t) {
      double rho = R * std::exp(-t / n);
      return cn * std::abs(f.value(std::min(rho, R)));
    };
    // Truncation horizon: the integrand is bounded by Phi(cn sup|f| /
    // lambda) e^{-t}, so the tail beyond T is below tol/10. If that bound
    // overflows, lambda sits far below the gauge and J >> 1.
    double top = phi.value(cn * sup_abs / lambda);
    if (!std::isfinite(top)) return kInf;
    double T = std::min(2e4, std::log(std::max(top, 2.0) * 10.0 / tol) + 30.0);
    QuadratureOptions opt;
    opt.rel_tol = tol / 10.0;
    opt.split_points = tcuts;
    auto integrand = [&](double t) {
      return phi.value(omega(t) / lambda) * std::exp(-t);
    };
    IntegralResult ir = integrate(integrand, 0.0, T, opt);
    if (ir.divergent) return kInf;
    return measure * ir.value;
  };
  NormResult r = solve_gauge(J, cn * initial_scale(sup_abs, phi, ball), tol);
  if (r.status == NormStatus::kFinite) {
    r.value /= cn;
    r.bracket_lo /= cn;
    r.bracket_hi /= cn;
  }
  return r;
}

NormResult alt_norm(const RadialProfile& f, int n, double s, const Ball& ball,
                    double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("alt_norm: tol > 0");
  if (!(s > (n - 1.0) / n))
    throw std::invalid_argument("alt_norm: requires s > (n-1)/n");
  OrliczFunction N(OrliczKind::kLogType, n, s);
  double sup_abs = profiles::grid_sup(f, 0.0, ball.radius, 4096, true);
  if (sup_abs == 0.0) return zero_result(tol);

  std::vector<double> brk = f.interior_breakpoints(ball.radius);
  auto inner = [&](double lambda) {
    auto integrand = [&](double rho) {
      return N.value(std::abs(f.value(rho)) / lambda);
    };
    IntegralResult ir = radial_integral(integrand, ball, tol / 10.0, brk);
    return ir.divergent ? kInf : ir.value;
  };
  auto A = [&](double lambda) { return lambda * (1.0 + inner(lambda)); };

  // bracket the convex objective: expand until the middle beats both ends
  double c = initial_scale(sup_abs, N, ball);
  double a = c / 64.0, b = c * 64.0;
  double Aa = A(a), Ab = A(b), Ac = A(c);
  for (int guard = 0; guard < 200 && Aa < Ac; ++guard) {
    b = c;
    Ab = Ac;
    c = a;
    Ac = Aa;
    a /= 8.0;
    Aa = A(a);
  }
  for (int guard = 0; guard < 200 && Ab < Ac; ++guard) {
    a = c;
    Aa = Ac;
    c = b;
    Ac = Ab;
    b *= 8.0;
    Ab = A(b);
  }
  // golden-section reduction on [a, b]
  const double phi_ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi_ratio * (b - a), x2 = a + phi_ratio * (b - a);
  double A1 = A(x1), A2 = A(x2);
  for (int it = 0; it < 400 && (b - a) > tol * std::max(b, 1e-300); ++it) {
    if (A1 <= A2) {
      b = x2;
      x2 = x1;
      A2 = A1;
      x1 = b - phi_ratio * (b - a);
      A1 = A(x1);
    } else {
      a = x1;
      x1 = x2;
      A1 = A2;
      x2 = a + phi_ratio * (b - a);
      A2 = A(x2);
    }
  }
  double lam = 0.5 * (a + b);
  NormResult r;
  r.value = A(lam);
  r.bracket_lo = a;
  r.bracket_hi = b;
  r.tol = tol;
  r.functional_at_value = inner(lam);
  r.status = NormStatus::kFinite;
  return r;
}

double lebesgue_norm(const RadialProfile& f, double p, const Ball& ball,
                     double tol) {
  if (!(p >= 1.0)) throw std::invalid_argument("lebesgue_norm: p >= 1 required");
  if (!(tol > 0.0)) throw std::invalid_argument("lebesgue_norm: tol > 0");
  std::vector<double> brk = f.interior_breakpoints(ball.radius);
  auto integrand = [&](double rho) {
    return std::pow(std::abs(f.value(rho)), p);
  };
  IntegralResult ir = radial_integral(integrand, ball, tol, brk);
  if (ir.divergent) return kInf;
  return std::pow(ir.value, 1.0 / p);
}

}  // namespace orlicz
