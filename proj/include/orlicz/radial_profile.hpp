#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace orlicz {

enum class Continuity { kPiecewise, kC0, kC1 };
enum class Side { kLeft, kRight };

// One smooth piece of a radial function, given by value and its first two
// derivatives. Each callable must be evaluable on the closed interval the
// piece covers (one-sided at the endpoints).
struct Piece {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> second;
};

// Piecewise-smooth radial function rho |-> f(rho) on [0, domain_max()].
// breakpoints are strictly increasing and start at 0; piece i covers
// [breakpoints[i], breakpoints[i+1]]. Point evaluation at an interior
// breakpoint uses the right piece; *_side selects explicitly.
class RadialProfile {
 public:
  RadialProfile(std::vector<double> breakpoints, std::vector<Piece> pieces,
                Continuity continuity, double log_alpha_at_zero = 0.0);

  double value(double rho) const;
  double deriv(double rho) const;
  double second(double rho) const;
  double value_side(double rho, Side side) const;
  double deriv_side(double rho, Side side) const;
  double second_side(double rho, Side side) const;

  const std::vector<double>& breakpoints() const { return breaks_; }
  // breakpoints strictly inside (0, hi)
  std::vector<double> interior_breakpoints(double hi) const;
  double domain_max() const { return breaks_.back(); }
  Continuity continuity() const { return continuity_; }
  std::size_t piece_count() const { return pieces_.size(); }
  std::size_t piece_index(double rho) const;

  // Coefficient alpha of a log(1/rho) singularity at the origin (0 for
  // bounded profiles). Drives closed-form divergence certificates for
  // exponential-class norms.
  double log_alpha() const { return log_alpha_; }
  bool unbounded_at_zero() const { return log_alpha_ > 0.0; }

  // Largest relative mismatch across interior breakpoints (value jumps, and
  // derivative jumps too for kC1). validate() throws if the declared
  // continuity class is violated beyond tol.
  double max_discontinuity() const;
  void validate(double tol = 1e-12) const;

 private:
  std::size_t left_piece_index(double rho) const;

  std::vector<double> breaks_;
  std::vector<Piece> pieces_;
  Continuity continuity_;
  double log_alpha_;
};

namespace profiles {

// --- elementary piece laws (for Builder assembly) ---------------------------
Piece make_constant_piece(double c);
Piece make_power_piece(double a, double b, double p);  // a - b * rho^p
Piece make_log_piece(double alpha);                    // alpha * log(1/rho)
Piece make_bump_piece(double height, double from, double to);

// --- single-piece factories on [0, to] --------------------------------------
RadialProfile constant(double c, double to);
// a - b * rho^p
RadialProfile power(double a, double b, double p, double to);
// alpha * log(1/rho); carries a log singularity marker at the origin
RadialProfile log_inverse(double alpha, double to);
// C^infinity bump of the given peak height supported on (from, to),
// extended by zero on [0, from] and, when domain_to > to, on [to, domain_to]
RadialProfile bump(double height, double from, double to,
                   double domain_to = -1.0);

// Incremental assembly: append pieces left to right, first from must be 0.
class Builder {
 public:
  Builder& append(double from, double to, Piece piece);
  Builder& append_constant(double from, double to, double c);
  RadialProfile finish(Continuity declared, double log_alpha = 0.0) &&;

 private:
  std::vector<double> breaks_;
  std::vector<Piece> pieces_;
};

// --- transforms ------------------------------------------------------------
// F applied pointwise: F(f(rho)), with dF, d2F the derivatives of F.
// extra_breaks (values of rho) are merged into f's breakpoints.
RadialProfile compose(const RadialProfile& f,
                      std::function<double(double)> F,
                      std::function<double(double)> dF,
                      std::function<double(double)> d2F,
                      const std::vector<double>& extra_breaks,
                      Continuity declared, double log_alpha);
RadialProfile scale(const RadialProfile& f, double c);      // c * f
RadialProfile shift(const RadialProfile& f, double c);      // f + c
RadialProfile power_map(const RadialProfile& f, double q);  // f^q, needs f > 0
RadialProfile reciprocal(const RadialProfile& f);           // 1/f, needs f > 0
RadialProfile add(const RadialProfile& f, const RadialProfile& g);
RadialProfile restrict(const RadialProfile& f, double to);
// g(x) = value_scale * f(rho_scale * x) on [0, f.domain_max()/rho_scale]
RadialProfile dilate(const RadialProfile& f, double rho_scale,
                     double value_scale);
// min(f, level); continuity degrades to C0 at new crossings
RadialProfile truncate_at(const RadialProfile& f, double level);

// --- scanning utilities -----------------------------------------------------
// roots of f - level, found by per-piece scanning plus bisection
std::vector<double> level_crossings(const RadialProfile& f, double level,
                                    int scan_points = 256);
// extrema over [lo, hi] from a uniform grid refined with breakpoints and
// endpoints; absolute=true scans |f|
double grid_sup(const RadialProfile& f, double lo, double hi,
                int samples = 4096, bool absolute = false);
double grid_inf(const RadialProfile& f, double lo, double hi,
                int samples = 4096);

}  // namespace profiles
}  // namespace orlicz
