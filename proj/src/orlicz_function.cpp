#include "orlicz/orlicz_function.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "orlicz/quadrature.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// int_0^L y^m e^y dy = sum_{k>=0} L^{m+1+k} / (k! (m+1+k)), accurate for
// L <= 1 where the series is rapidly convergent without cancellation.
double log_integral_series(double m, double L) {
  double ck = 1.0;  // L^k / k!
  double sum = 0.0;
  for (int k = 0; k < 80; ++k) {
    double term = ck / (m + 1.0 + k);
    sum += term;
    if (term < 1e-18 * sum) break;
    ck *= L / (k + 1);
  }
  return std::pow(L, m + 1.0) * sum;
}

// int_1^L y^m e^y dy by composite fixed Gauss-Legendre on unit segments;
// the integrand is analytic and gently varying per segment.
double log_integral_tail(double m, double L) {
  auto g = [m](double y) { return std::pow(y, m) * std::exp(y); };
  double acc = 0.0;
  double a = 1.0;
  while (a < L) {
    double b = std::min(a + 1.0, L);
    acc += gauss_legendre_15(g, a, b);
    a = b;
  }
  return acc;
}

// M(t) = sum_{j>=1} t^{jp+1} / (j! (jp+1))
double exp_type_series(double t, double p) {
  if (t == 0.0) return 0.0;
  double tp = std::pow(t, p);
  if (tp > 690.0) return kInf;  // e^{t^p} overflows the accumulation anyway
  double fj = 1.0;  // t^{jp} / j!
  double sum = 0.0;
  for (int j = 1; j < 4000; ++j) {
    fj *= tp / j;
    double term = fj * t / (j * p + 1.0);
    sum += term;
    if (term < 1e-18 * sum && j > tp) break;
  }
  return std::isfinite(sum) ? sum : kInf;
}

}  // namespace

double OrliczFunction::value(double t) const {
  if (kind == OrliczKind::kAlternative)
    throw std::logic_error("OrliczFunction: the amalgam kind has no pointwise value");
  if (t < 0.0 || std::isnan(t))
    throw std::invalid_argument("OrliczFunction::value: t >= 0 required");
  if (t == 0.0) return 0.0;
  if (std::isinf(t)) return kInf;
  switch (kind) {
    case OrliczKind::kLogType: {
      const double m = log_exponent();
      const double L = std::log1p(t);
      if (L <= 1.0) return log_integral_series(m, L);
      return log_integral_series(m, 1.0) + log_integral_tail(m, L);
    }
    case OrliczKind::kExpType: {
      const double p = exp_exponent();
      if (std::abs(p - 1.0) < 1e-14) return std::expm1(t) - t;
      return exp_type_series(t, p);
    }
    case OrliczKind::kExponential: {
      const double p = exp_exponent();
      double e = p * std::log(t);
      if (e > 700.0) return kInf;
      double x = std::exp(e);  // t^p
      if (x > 709.0) return kInf;
      return std::expm1(x);
    }
    default:
      return kInf;
  }
}

double OrliczFunction::inverse(double y) const {
  if (y < 0.0 || std::isnan(y))
    throw std::invalid_argument("OrliczFunction::inverse: y >= 0 required");
  if (y == 0.0) return 0.0;
  if (kind == OrliczKind::kExponential)
    return std::pow(std::log1p(y), 1.0 / exp_exponent());
  // strictly increasing and continuous: bracket then bisect
  double hi = 1.0;
  for (int i = 0; i < 1200 && value(hi) < y; ++i) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    double mid = lo == 0.0 ? hi / 2.0 : std::sqrt(lo * hi);
    if (lo > 0.0 && (hi - lo) <= 1e-15 * hi) break;
    if (value(mid) < y) lo = mid;
    else hi = mid;
  }
  return hi;
}

double exp_majorant_constant(int n, double s) {
  static std::map<std::pair<int, double>, double> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({n, s});
    if (it != cache.end()) return it->second;
  }
  OrliczFunction M(OrliczKind::kExpType, n, s);
  const double p = M.exp_exponent();
  auto ratio = [&](double t) {
    double v = M.value(t);
    if (!std::isfinite(v)) return 0.0;
    return std::log1p(v) / std::pow(t, p);
  };
  // coarse scan of log t, then three rounds of local refinement
  double tmax = std::pow(689.0, 1.0 / p);
  double llo = std::log(1e-6), lhi = std::log(tmax * 0.999);
  double best_x = llo, best = 0.0;
  const int kCoarse = 400;
  for (int i = 0; i <= kCoarse; ++i) {
    double x = llo + (lhi - llo) * i / kCoarse;
    double r = ratio(std::exp(x));
    if (r > best) {
      best = r;
      best_x = x;
    }
  }
  double w = (lhi - llo) / kCoarse;
  for (int round = 0; round < 3; ++round) {
    double a = best_x - w, b = best_x + w;
    for (int i = 0; i <= 100; ++i) {
      double x = a + (b - a) * i / 100.0;
      double r = ratio(std::exp(x));
      if (r > best) {
        best = r;
        best_x = x;
      }
    }
    w = (b - a) / 100.0;
  }
  // log1p(M(t)) / t^p tends to 1 as t grows (the integrand's exponential
  // dominates), approaching from below when p >= 1, so the supremum is at
  // least 1 even when no finite grid point reaches it.
  double result = std::max(best, 1.0) * (1.0 + 1e-9);
  std::lock_guard<std::mutex> lk(mu);
  cache[{n, s}] = result;
  return result;
}

}  // namespace orlicz
