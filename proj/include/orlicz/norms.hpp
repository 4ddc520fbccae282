#pragma once

#include "orlicz/ball.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

enum class NormStatus { kFinite, kZero, kInfinite };
enum class DivergenceReason { kNone, kAnalyticTail, kNumericOverflow };

// Result of a gauge-norm computation with its solve certificate. For
// Luxemburg-type norms (luxemburg_norm, exp_norm), value is the upper end of
// the final bracket [bracket_lo, bracket_hi], J(value) <= 1, and
// functional_at_value records J(value), certified within 10 * tol of 1.
// For alt_norm the certificate fields describe the golden-section bracket on
// the minimizing parameter; functional_at_value is the inner integral there.
struct NormResult {
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double tol = 0.0;
  double functional_at_value = 0.0;
  NormStatus status = NormStatus::kFinite;
  DivergenceReason reason = DivergenceReason::kNone;

  bool is_finite() const { return status != NormStatus::kInfinite; }
};

// Luxemburg gauge inf{ lambda > 0 : int_B Phi(|f|/lambda) dx <= 1 } for a
// kLogType / kExpType / kExponential function. Returns a zero result for
// f == 0 and a certified infinite result when the integral diverges for
// every lambda.
NormResult luxemburg_norm(const RadialProfile& f, const OrliczFunction& phi,
                          const Ball& ball, double tol);

// Exponential-class gauge with Phi(t) = e^{t^{s/(n-1)}} - 1 on the given
// ball. via_substitution evaluates the defining integral after the exact
// change of variables rho = R e^{-t/n} (requires |f| nonincreasing); both
// routes agree within a few tol.
NormResult exp_norm(const RadialProfile& f, double s, const Ball& ball,
                    double tol, bool via_substitution = false);

// Amalgam functional inf_{lambda>0} lambda (1 + int_B N(|f|/lambda) dx) with
// N the kLogType function of parameters (n, s). Requires s > (n-1)/n, which
// makes the infimum positive and the objective convex in lambda. Sandwiched
// between the kLogType Luxemburg gauge and twice it.
NormResult alt_norm(const RadialProfile& f, int n, double s, const Ball& ball,
                    double tol);

// (int_B |f|^p dx)^{1/p}, p >= 1; +infinity if the integral diverges.
double lebesgue_norm(const RadialProfile& f, double p, const Ball& ball,
                     double tol);

// True when int_B Phi(|f|/lambda) dx = +infinity for every lambda > 0, by
// the closed-form tail criterion: an exponential-class Phi with exponent
// p = s/(n-1) > 1 applied to a profile with a log(1/rho) singularity.
bool divergence_certified(const RadialProfile& f, const OrliczFunction& phi);

}  // namespace orlicz
