#include "orlicz/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace orlicz {

namespace {

bool nearly_equal(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

RadialProfile::RadialProfile(std::vector<double> breakpoints,
                             std::vector<Piece> pieces, Continuity continuity,
                             double log_alpha_at_zero)
    : breaks_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      continuity_(continuity),
      log_alpha_(log_alpha_at_zero) {
  if (breaks_.size() != pieces_.size() + 1)
    throw std::invalid_argument("RadialProfile: need one more breakpoint than pieces");
  if (pieces_.empty()) throw std::invalid_argument("RadialProfile: no pieces");
  if (breaks_.front() != 0.0)
    throw std::invalid_argument("RadialProfile: domain must start at 0");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw std::invalid_argument("RadialProfile: breakpoints must be strictly increasing");
  for (const Piece& p : pieces_)
    if (!p.value || !p.deriv || !p.second)
      throw std::invalid_argument("RadialProfile: piece callables must all be set");
}

std::size_t RadialProfile::piece_index(double rho) const {
  if (rho < 0.0 || rho > domain_max() * (1.0 + 1e-12) + 1e-300)
    throw std::domain_error("RadialProfile: evaluation outside domain");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), rho);
  std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
  if (idx == 0) return 0;  // rho < 0 handled above; rho == 0 gives idx 1
  idx -= 1;
  return std::min(idx, pieces_.size() - 1);
}

std::size_t RadialProfile::left_piece_index(double rho) const {
  // piece whose interval ends at (or contains) rho, for left-sided evaluation
  if (rho <= 0.0)
    throw std::domain_error("RadialProfile: no left-side evaluation at 0");
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), rho);
  if (it != breaks_.end() && nearly_equal(*it, rho, 1e-15)) {
    std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
    return j == 0 ? 0 : j - 1;
  }
  return piece_index(rho);
}

double RadialProfile::value(double rho) const {
  return pieces_[piece_index(rho)].value(rho);
}
double RadialProfile::deriv(double rho) const {
  return pieces_[piece_index(rho)].deriv(rho);
}
double RadialProfile::second(double rho) const {
  return pieces_[piece_index(rho)].second(rho);
}
double RadialProfile::value_side(double rho, Side side) const {
  std::size_t i = side == Side::kLeft ? left_piece_index(rho) : piece_index(rho);
  return pieces_[i].value(rho);
}
double RadialProfile::deriv_side(double rho, Side side) const {
  std::size_t i = side == Side::kLeft ? left_piece_index(rho) : piece_index(rho);
  return pieces_[i].deriv(rho);
}
double RadialProfile::second_side(double rho, Side side) const {
  std::size_t i = side == Side::kLeft ? left_piece_index(rho) : piece_index(rho);
  return pieces_[i].second(rho);
}

std::vector<double> RadialProfile::interior_breakpoints(double hi) const {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 <= breaks_.size(); ++i) {
    double b = breaks_[i];
    if (b > 0.0 && b < hi) out.push_back(b);
  }
  return out;
}

double RadialProfile::max_discontinuity() const {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < breaks_.size() + 1 && i < pieces_.size(); ++i) {
    double b = breaks_[i];
    double vl = pieces_[i - 1].value(b), vr = pieces_[i].value(b);
    double denom = std::max({1.0, std::abs(vl), std::abs(vr)});
    worst = std::max(worst, std::abs(vl - vr) / denom);
    if (continuity_ == Continuity::kC1) {
      double dl = pieces_[i - 1].deriv(b), dr = pieces_[i].deriv(b);
      double dden = std::max({1.0, std::abs(dl), std::abs(dr)});
      worst = std::max(worst, std::abs(dl - dr) / dden);
    }
  }
  return worst;
}

void RadialProfile::validate(double tol) const {
  if (continuity_ == Continuity::kPiecewise) return;
  double worst = max_discontinuity();
  if (worst > tol)
    throw std::logic_error("RadialProfile: declared continuity violated, mismatch " +
                           std::to_string(worst));
}

namespace profiles {

Piece make_constant_piece(double c) {
  return Piece{[c](double) { return c; }, [](double) { return 0.0; },
               [](double) { return 0.0; }};
}

Piece make_power_piece(double a, double b, double p) {
  return Piece{
      [a, b, p](double r) { return a - b * std::pow(r, p); },
      [b, p](double r) { return -b * p * std::pow(r, p - 1.0); },
      [b, p](double r) { return -b * p * (p - 1.0) * std::pow(r, p - 2.0); }};
}

Piece make_log_piece(double alpha) {
  return Piece{[alpha](double r) {
                 return r <= 0.0 ? std::numeric_limits<double>::infinity()
                                 : alpha * std::log(1.0 / r);
               },
               [alpha](double r) { return -alpha / r; },
               [alpha](double r) { return alpha / (r * r); }};
}

Piece make_bump_piece(double height, double from, double to) {
  double mid = 0.5 * (from + to), halfw = 0.5 * (to - from);
  auto t_of = [mid, halfw](double r) { return (r - mid) / halfw; };
  auto val = [height, t_of](double r) {
    double t = t_of(r);
    if (std::abs(t) >= 1.0) return 0.0;
    return height * std::exp(1.0 - 1.0 / (1.0 - t * t));
  };
  auto der = [height, t_of, halfw](double r) {
    double t = t_of(r);
    if (std::abs(t) >= 1.0) return 0.0;
    double om = 1.0 - t * t;
    return height * std::exp(1.0 - 1.0 / om) * (-2.0 * t / (om * om)) / halfw;
  };
  auto sec = [height, t_of, halfw](double r) {
    double t = t_of(r);
    if (std::abs(t) >= 1.0) return 0.0;
    double om = 1.0 - t * t;
    double g = 2.0 * t / (om * om);                    // d/dt of 1/om
    double gp = (2.0 + 6.0 * t * t) / (om * om * om);  // d/dt of g
    return height * std::exp(1.0 - 1.0 / om) * (g * g - gp) / (halfw * halfw);
  };
  return Piece{val, der, sec};
}

namespace {

std::vector<double> merge_breaks(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  std::vector<double> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) {
                          return std::abs(x - y) <=
                                 1e-14 * std::max(1.0, std::abs(x));
                        }),
            out.end());
  return out;
}

// Evaluate parent on [lo, hi] with correct one-sided choice at the ends.
Piece window_piece(std::shared_ptr<const RadialProfile> parent, double lo,
                   double hi) {
  auto v = [parent, lo, hi](double x) {
    if (x >= hi) return parent->value_side(hi, Side::kLeft);
    if (x <= lo && lo > 0.0) return parent->value_side(lo, Side::kRight);
    return parent->value(x);
  };
  auto d = [parent, lo, hi](double x) {
    if (x >= hi) return parent->deriv_side(hi, Side::kLeft);
    if (x <= lo && lo > 0.0) return parent->deriv_side(lo, Side::kRight);
    return parent->deriv(x);
  };
  auto s = [parent, lo, hi](double x) {
    if (x >= hi) return parent->second_side(hi, Side::kLeft);
    if (x <= lo && lo > 0.0) return parent->second_side(lo, Side::kRight);
    return parent->second(x);
  };
  return Piece{v, d, s};
}

}  // namespace

RadialProfile constant(double c, double to) {
  return RadialProfile({0.0, to}, {make_constant_piece(c)}, Continuity::kC1);
}

RadialProfile power(double a, double b, double p, double to) {
  return RadialProfile({0.0, to}, {make_power_piece(a, b, p)},
                       Continuity::kC1);
}

RadialProfile log_inverse(double alpha, double to) {
  return RadialProfile({0.0, to}, {make_log_piece(alpha)}, Continuity::kC1,
                       alpha);
}

RadialProfile bump(double height, double from, double to, double domain_to) {
  Builder bl;
  if (from > 0.0) bl.append_constant(0.0, from, 0.0);
  bl.append(std::max(from, 0.0), to, make_bump_piece(height, from, to));
  if (domain_to > to) bl.append_constant(to, domain_to, 0.0);
  return std::move(bl).finish(Continuity::kC1);
}

Builder& Builder::append(double from, double to, Piece piece) {
  if (breaks_.empty()) {
    if (from != 0.0) throw std::invalid_argument("Builder: first piece must start at 0");
    breaks_.push_back(0.0);
  } else if (std::abs(breaks_.back() - from) > 1e-14 * std::max(1.0, from)) {
    throw std::invalid_argument("Builder: pieces must abut");
  }
  if (!(to > breaks_.back()))
    throw std::invalid_argument("Builder: piece must extend the domain");
  breaks_.push_back(to);
  pieces_.push_back(std::move(piece));
  return *this;
}

Builder& Builder::append_constant(double from, double to, double c) {
  return append(from, to, make_constant_piece(c));
}

RadialProfile Builder::finish(Continuity declared, double log_alpha) && {
  return RadialProfile(std::move(breaks_), std::move(pieces_), declared,
                       log_alpha);
}

RadialProfile compose(const RadialProfile& f, std::function<double(double)> F,
                      std::function<double(double)> dF,
                      std::function<double(double)> d2F,
                      const std::vector<double>& extra_breaks,
                      Continuity declared, double log_alpha) {
  auto parent = std::make_shared<const RadialProfile>(f);
  std::vector<double> cuts;
  for (double b : extra_breaks)
    if (b > 0.0 && b < f.domain_max()) cuts.push_back(b);
  std::vector<double> breaks = merge_breaks(f.breakpoints(), cuts);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Piece base = window_piece(parent, breaks[i], breaks[i + 1]);
    auto bv = base.value, bd = base.deriv, bs = base.second;
    pieces.push_back(Piece{
        [F, bv](double x) { return F(bv(x)); },
        [F, dF, bv, bd](double x) { return dF(bv(x)) * bd(x); },
        [dF, d2F, bv, bd, bs](double x) {
          double u = bv(x), du = bd(x);
          return d2F(u) * du * du + dF(u) * bs(x);
        }});
  }
  return RadialProfile(std::move(breaks), std::move(pieces), declared,
                       log_alpha);
}

RadialProfile scale(const RadialProfile& f, double c) {
  return compose(
      f, [c](double u) { return c * u; }, [c](double) { return c; },
      [](double) { return 0.0; }, {}, f.continuity(), c * f.log_alpha());
}

RadialProfile shift(const RadialProfile& f, double c) {
  return compose(
      f, [c](double u) { return u + c; }, [](double) { return 1.0; },
      [](double) { return 0.0; }, {}, f.continuity(), f.log_alpha());
}

RadialProfile power_map(const RadialProfile& f, double q) {
  Continuity cont =
      f.continuity() == Continuity::kC1 ? Continuity::kC1 : f.continuity();
  return compose(
      f, [q](double u) { return std::pow(u, q); },
      [q](double u) { return q * std::pow(u, q - 1.0); },
      [q](double u) { return q * (q - 1.0) * std::pow(u, q - 2.0); }, {}, cont,
      0.0);
}

RadialProfile reciprocal(const RadialProfile& f) { return power_map(f, -1.0); }

RadialProfile add(const RadialProfile& f, const RadialProfile& g) {
  if (std::abs(f.domain_max() - g.domain_max()) >
      1e-12 * std::max(f.domain_max(), g.domain_max()))
    throw std::invalid_argument("add: domains must agree");
  auto pf = std::make_shared<const RadialProfile>(f);
  auto pg = std::make_shared<const RadialProfile>(g);
  std::vector<double> breaks = merge_breaks(f.breakpoints(), g.breakpoints());
  breaks.back() = std::min(f.domain_max(), g.domain_max());
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double lo = breaks[i], hi = breaks[i + 1];
    Piece a = window_piece(pf, lo, hi), b = window_piece(pg, lo, hi);
    auto av = a.value, ad = a.deriv, as = a.second;
    auto bv2 = b.value, bd2 = b.deriv, bs2 = b.second;
    pieces.push_back(Piece{[av, bv2](double x) { return av(x) + bv2(x); },
                           [ad, bd2](double x) { return ad(x) + bd2(x); },
                           [as, bs2](double x) { return as(x) + bs2(x); }});
  }
  Continuity cont = std::min(f.continuity(), g.continuity(),
                             [](Continuity x, Continuity y) {
                               return static_cast<int>(x) < static_cast<int>(y);
                             });
  return RadialProfile(std::move(breaks), std::move(pieces), cont,
                       f.log_alpha() + g.log_alpha());
}

RadialProfile restrict(const RadialProfile& f, double to) {
  if (!(to > 0.0) || to > f.domain_max() * (1.0 + 1e-12))
    throw std::invalid_argument("restrict: bad radius");
  auto parent = std::make_shared<const RadialProfile>(f);
  std::vector<double> breaks{0.0};
  for (double b : f.interior_breakpoints(to)) breaks.push_back(b);
  breaks.push_back(to);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    pieces.push_back(window_piece(parent, breaks[i], breaks[i + 1]));
  return RadialProfile(std::move(breaks), std::move(pieces), f.continuity(),
                       f.log_alpha());
}

RadialProfile dilate(const RadialProfile& f, double rho_scale,
                     double value_scale) {
  if (!(rho_scale > 0.0)) throw std::invalid_argument("dilate: rho_scale > 0");
  auto parent = std::make_shared<const RadialProfile>(f);
  std::vector<double> breaks;
  for (double b : f.breakpoints()) breaks.push_back(b / rho_scale);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double plo = f.breakpoints()[i], phi = f.breakpoints()[i + 1];
    auto v = [parent, rho_scale, value_scale, plo, phi](double x) {
      double r = std::clamp(x * rho_scale, plo, phi);
      if (r >= phi) return value_scale * parent->value_side(phi, Side::kLeft);
      return value_scale * parent->value(r);
    };
    auto d = [parent, rho_scale, value_scale, plo, phi](double x) {
      double r = std::clamp(x * rho_scale, plo, phi);
      double g = r >= phi ? parent->deriv_side(phi, Side::kLeft)
                          : parent->deriv(r);
      return value_scale * rho_scale * g;
    };
    auto s = [parent, rho_scale, value_scale, plo, phi](double x) {
      double r = std::clamp(x * rho_scale, plo, phi);
      double g = r >= phi ? parent->second_side(phi, Side::kLeft)
                          : parent->second(r);
      return value_scale * rho_scale * rho_scale * g;
    };
    pieces.push_back(Piece{v, d, s});
  }
  return RadialProfile(std::move(breaks), std::move(pieces), f.continuity(),
                       value_scale * f.log_alpha());
}

std::vector<double> level_crossings(const RadialProfile& f, double level,
                                    int scan_points) {
  std::vector<double> roots;
  const auto& bp = f.breakpoints();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    double lo = bp[i], hi = bp[i + 1];
    auto g = [&](double x) { return f.value_side(x, x >= hi ? Side::kLeft : Side::kRight) - level; };
    double prev_x = lo == 0.0 ? lo + 1e-15 * (hi - lo) : lo;
    double prev = g(prev_x);
    for (int k = 1; k <= scan_points; ++k) {
      double x = lo + (hi - lo) * k / scan_points;
      double cur = g(x);
      if (std::isfinite(prev) && std::isfinite(cur) && prev * cur <= 0.0 &&
          (prev != 0.0 || cur != 0.0)) {
        double a = prev_x, b = x, fa = prev;
        for (int it = 0; it < 80; ++it) {
          double m = 0.5 * (a + b), fm = g(m);
          if (fa * fm <= 0.0) b = m;
          else a = m, fa = fm;
        }
        roots.push_back(0.5 * (a + b));
      }
      prev_x = x;
      prev = cur;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double x, double y) {
                            return std::abs(x - y) <=
                                   1e-11 * f.domain_max();
                          }),
              roots.end());
  return roots;
}

RadialProfile truncate_at(const RadialProfile& f, double level) {
  std::vector<double> cuts = level_crossings(f, level);
  auto parent = std::make_shared<const RadialProfile>(f);
  std::vector<double> breaks = merge_breaks(f.breakpoints(), cuts);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double lo = breaks[i], hi = breaks[i + 1];
    double mid = 0.5 * (lo + hi);
    if (parent->value(mid) > level) {
      pieces.push_back(make_constant_piece(level));
    } else {
      pieces.push_back(window_piece(parent, lo, hi));
    }
  }
  Continuity cont = f.continuity() == Continuity::kPiecewise
                        ? Continuity::kPiecewise
                        : Continuity::kC0;
  double la = f.log_alpha() > 0.0 ? 0.0 : f.log_alpha();
  return RadialProfile(std::move(breaks), std::move(pieces), cont, la);
}

double grid_sup(const RadialProfile& f, double lo, double hi, int samples,
                bool absolute) {
  double best = -std::numeric_limits<double>::infinity();
  auto eat = [&](double x) {
    double v = f.value(x);
    if (absolute) v = std::abs(v);
    if (std::isnan(v)) return;
    best = std::max(best, v);
  };
  for (int i = 0; i <= samples; ++i) eat(lo + (hi - lo) * i / samples);
  for (double b : f.interior_breakpoints(hi)) {
    if (b <= lo) continue;
    eat(b);
    eat(std::nextafter(b, lo));  // left limit probe
  }
  eat(hi);
  return best;
}

double grid_inf(const RadialProfile& f, double lo, double hi, int samples) {
  double best = std::numeric_limits<double>::infinity();
  auto eat = [&](double x) {
    double v = f.value(x);
    if (std::isnan(v)) return;
    best = std::min(best, v);
  };
  for (int i = 0; i <= samples; ++i) eat(lo + (hi - lo) * i / samples);
  for (double b : f.interior_breakpoints(hi)) {
    if (b <= lo) continue;
    eat(b);
    eat(std::nextafter(b, lo));
  }
  eat(hi);
  return best;
}

}  // namespace profiles
}  // namespace orlicz
