#include "orlicz/continuity.hpp"

#include <cmath>
#include <stdexcept>

#include "orlicz/norms.hpp"

namespace orlicz {

std::vector<ShrinkRow> shrink_check(const RadialProfile& h, int n, double r,
                                    std::span<const double> radii,
                                    double tol) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("shrink_check: 0 < r < 1 required");
  const double eps_prime = 0.5 * (1.0 - r);
  OrliczFunction coarse(OrliczKind::kLogType, n, r);
  OrliczFunction fine(OrliczKind::kLogType, n, r + eps_prime);
  std::vector<ShrinkRow> rows;
  for (double R : radii) {
    if (!(R > 0.0 && R < std::pow(3.0, -10.0)))
      throw std::invalid_argument(
          "shrink_check: radii must lie below 3^{-10}");
    Ball ball(n, R);
    ShrinkRow row;
    row.R = R;
    row.lhs = luxemburg_norm(h, fine, ball, tol).value;
    row.rhs = luxemburg_norm(h, coarse, ball, tol).value;
    row.gain = std::pow(std::abs(std::log(1.0 / R)), -eps_prime);
    row.measured_constant =
        row.rhs > 0.0 ? row.lhs / (row.gain * row.rhs) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

OscillationResult oscillation_recursion(const OscillationParams& params) {
  if (!(params.theta > 0.0 && params.theta < 1.0))
    throw std::invalid_argument("oscillation_recursion: theta in (0,1)");
  if (!(params.tau >= 0.0))
    throw std::invalid_argument("oscillation_recursion: tau >= 0");
  if (params.m_max < 1)
    throw std::invalid_argument("oscillation_recursion: m_max >= 1");
  OscillationResult out;
  out.omega.reserve(params.m_max + 1);
  out.omega.push_back(params.omega0);
  for (int m = 1; m <= params.m_max; ++m) {
    double rho = params.R * std::pow(3.0, 1.0 - m);
    double bump = params.kbar && params.tau > 0.0
                      ? params.tau * params.kbar(rho)
                      : 0.0;
    out.omega.push_back(params.theta * out.omega.back() + bump);
  }
  for (int m = 10; m <= params.m_max; ++m)
    out.k_index = std::max(out.k_index,
                           out.omega[m] * std::pow(double(m), params.gamma));
  for (int m = 1; m <= params.m_max; ++m) {
    double rho = params.R * std::pow(3.0, -m);
    out.k_log = std::max(
        out.k_log,
        out.omega[m] * std::pow(std::abs(std::log(rho)), params.gamma));
  }
  // least squares of log omega against log m on the window [20, 60]
  int lo = 20, hi = std::min(60, params.m_max);
  if (hi - lo >= 8) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    bool positive = true;
    for (int m = lo; m <= hi; ++m) {
      if (!(out.omega[m] > 0.0)) {
        positive = false;
        break;
      }
      double x = std::log(double(m)), y = std::log(out.omega[m]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++cnt;
    }
    if (positive && cnt > 1) {
      out.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
      out.slope_valid = true;
    }
  }
  return out;
}

}  // namespace orlicz
