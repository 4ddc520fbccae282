#include "orlicz/harnack.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "orlicz/norms.hpp"

namespace orlicz {

ChainQuantities harnack_chain(const RadialProfile& u, const Ball& domain,
                              double R0, double r, double gauge,
                              double eps_shift, double tol) {
  if (!(R0 > 0.0) || 4.0 * R0 > domain.radius * (1.0 + 1e-12))
    throw std::invalid_argument("harnack_chain: need B_{4 R0} inside the domain");
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("harnack_chain: 0 < r < 1 required");
  if (!(eps_shift > 0.0))
    throw std::invalid_argument("harnack_chain: eps_shift > 0 keeps the reciprocal bounded");
  if (profiles::grid_inf(u, 0.0, 4.0 * R0) < -1e-12)
    throw std::invalid_argument("harnack_chain: profile must be nonnegative");

  ChainQuantities out;
  out.gauge = gauge;
  out.eps_shift = eps_shift;
  const int n = domain.n;
  RadialProfile ubar = profiles::shift(u, gauge + eps_shift);
  RadialProfile inv = profiles::reciprocal(ubar);
  Ball b2 = domain.with_radius(2.0 * R0);
  Ball b4 = domain.with_radius(4.0 * R0);

  out.values[0] = profiles::grid_sup(u, 0.0, R0, 20000);
  auto s2 = exp_norm(ubar, double(n), b2, tol);
  out.values[1] = s2.value;
  out.values[2] = lebesgue_norm(ubar, n / r, b4, tol);
  double inv_leb = lebesgue_norm(inv, n / r, b4, tol);
  out.values[3] = inv_leb > 0.0 ? 1.0 / inv_leb : 0.0;
  auto s5 = exp_norm(inv, double(n), b2, tol);
  out.values[4] = s5.is_finite() && s5.value > 0.0 ? 1.0 / s5.value : 0.0;
  out.values[5] = profiles::grid_inf(u, 0.0, R0, 20000);

  out.finite = s2.is_finite() && std::isfinite(out.values[2]);
  for (int i = 0; i < 5; ++i) {
    double denom = out.values[i + 1];
    out.ratios[i] = denom != 0.0
                        ? out.values[i] / denom
                        : std::numeric_limits<double>::infinity();
  }
  double floor = out.values[5] + gauge + eps_shift;
  out.harnack_quotient = out.values[0] / floor;
  return out;
}

DilationReport dilation_check(const RadialProfile& h, int n, double r,
                              double R, double R0, double tol) {
  if (!(R > 0.0 && R0 > 0.0 && R <= R0 * (1.0 + 1e-12)))
    throw std::invalid_argument("dilation_check: need 0 < R <= R0");
  const double roh = R / R0;
  if (8.0 * R > h.domain_max() * (1.0 + 1e-12))
    throw std::invalid_argument("dilation_check: profile must cover B_{8R}");
  OrliczFunction N(OrliczKind::kLogType, n, r);
  // hhat(x) = roh^n h(roh x) lives on [0, domain/roh] and covers B_{8 R0}
  RadialProfile hhat = profiles::dilate(h, roh, std::pow(roh, double(n)));
  Ball big(n, 8.0 * R0), small(n, 8.0 * R);
  DilationReport rep;
  rep.lhs = luxemburg_norm(hhat, N, big, tol).value;
  rep.rhs = luxemburg_norm(h, N, small, tol).value;
  rep.margin = rep.rhs - rep.lhs;
  return rep;
}

}  // namespace orlicz
