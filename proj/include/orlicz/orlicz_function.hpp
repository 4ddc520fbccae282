#pragma once

#include <stdexcept>

namespace orlicz {

// Families of integrand generators for the norms in this library, indexed by
// a dimension n >= 2 and a positive parameter s:
//   kLogType      N(t) = int_0^t log^m(1 + tau) dtau,      m = (n-1)/s
//   kExpType      M(t) = int_0^t (e^{tau^p} - 1) dtau,     p = s/(n-1)
//   kExponential  Phi(t) = e^{t^p} - 1,                    p = s/(n-1)
// kLogType and kExpType form a complementary Young pair (their right
// derivatives are mutual inverses). kExponential is convex only for p >= 1,
// i.e. s >= n-1; below that the gauge it induces is still well defined but
// is not a norm. kAlternative marks the amalgam functional handled by
// alt_norm and has no pointwise value.
enum class OrliczKind { kLogType, kExpType, kExponential, kAlternative };

struct OrliczFunction {
  OrliczKind kind;
  int n;
  double s;

  OrliczFunction(OrliczKind k, int dim, double param) : kind(k), n(dim), s(param) {
    if (dim < 2) throw std::invalid_argument("OrliczFunction: n >= 2 required");
    if (!(param > 0.0)) throw std::invalid_argument("OrliczFunction: s > 0 required");
  }

  double log_exponent() const { return (n - 1.0) / s; }  // m
  double exp_exponent() const { return s / (n - 1.0); }  // p
  bool convex() const {
    return kind != OrliczKind::kExponential || s >= n - 1.0;
  }

  // Phi(t) for t >= 0; +infinity on overflow. Throws for kAlternative.
  double value(double t) const;
  // inverse of value() on [0, +infinity)
  double inverse(double y) const;
};

// Smallest C with log(1 + M(t)) <= C t^p for all t > 0, where M is the
// kExpType function with parameters (n, s) and p = s/(n-1). Used to majorize
// the kExpType gauge by the kExponential one. Cached per (n, s).
double exp_majorant_constant(int n, double s);

}  // namespace orlicz
