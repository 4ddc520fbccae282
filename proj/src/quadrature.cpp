#include "orlicz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace orlicz {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// weights of the embedded 7-point Gauss rule (nodes kXgk[1], kXgk[3], kXgk[5], 0)
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Cell {
  double a, b;
  double value;  // K15 estimate
  double err;    // |K15 - G7|
  bool bad = false;  // non-finite sample inside
};

Cell evaluate_cell(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  long double resk = 0.0L, resg = 0.0L;
  bool bad = false;
  double fv[15];
  for (int i = 0; i < 8; ++i) {
    double x1 = c - h * kXgk[i];
    double v1 = f(x1);
    fv[i] = v1;
    if (!std::isfinite(v1)) bad = true;
    if (i < 7) {
      double x2 = c + h * kXgk[i];
      double v2 = f(x2);
      fv[14 - i] = v2;
      if (!std::isfinite(v2)) bad = true;
    }
  }
  for (int i = 0; i < 8; ++i) {
    double pair = (i < 7) ? fv[i] + fv[14 - i] : fv[7];
    resk += static_cast<long double>(kWgk[i]) * pair;
  }
  // Gauss nodes sit at kXgk indices 1,3,5 and the centre
  resg += static_cast<long double>(kWg[0]) * (fv[1] + fv[13]);
  resg += static_cast<long double>(kWg[1]) * (fv[3] + fv[11]);
  resg += static_cast<long double>(kWg[2]) * (fv[5] + fv[9]);
  resg += static_cast<long double>(kWg[3]) * fv[7];
  Cell cell;
  cell.a = a;
  cell.b = b;
  cell.value = static_cast<double>(h * resk);
  cell.err = static_cast<double>(std::abs(h * (resk - resg)));
  cell.bad = bad;
  if (bad) {
    cell.value = 0.0;
    cell.err = std::numeric_limits<double>::infinity();
  }
  return cell;
}

struct ByError {
  bool operator()(const Cell& x, const Cell& y) const { return x.err < y.err; }
};

}  // namespace

double gauss_legendre_15(const std::function<double(double)>& f, double a,
                         double b) {
  // classical 15-point Gauss-Legendre nodes/weights on [-1, 1]
  static constexpr double x[8] = {
      0.000000000000000, 0.201194093997435, 0.394151347077563,
      0.570972172608539, 0.724417731360170, 0.848206583410427,
      0.937273392400706, 0.987992518020485};
  static constexpr double w[8] = {
      0.202578241925561, 0.198431485327112, 0.186161000015562,
      0.166269205816994, 0.139570677926154, 0.107159220467172,
      0.070366047488108, 0.030753241996117};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  long double s = static_cast<long double>(w[0]) * f(c);
  for (int i = 1; i < 8; ++i)
    s += static_cast<long double>(w[i]) * (f(c - h * x[i]) + f(c + h * x[i]));
  return static_cast<double>(h * s);
}

IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureOptions& opt) {
  IntegralResult out;
  if (!(b > a)) {
    out.converged = true;
    return out;
  }
  // initial partition: split points, optional geometric seeds toward a
  std::vector<double> knots{a, b};
  for (double s : opt.split_points)
    if (s > a && s < b) knots.push_back(s);
  if (opt.geometric_left_seeds) {
    double w = b - a;
    for (int k = 1; k <= 30; ++k) {
      double p = a + w * std::pow(4.0, -k);
      if (p > a && p < b) knots.push_back(p);
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::priority_queue<Cell, std::vector<Cell>, ByError> heap;
  long double total = 0.0L, toterr = 0.0L;
  int bad_cells = 0;
  auto push = [&](const Cell& c) {
    total += c.value;
    if (c.bad) ++bad_cells;
    else toterr += c.err;
    heap.push(c);
  };
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    push(evaluate_cell(f, knots[i], knots[i + 1]));

  int evaluations = static_cast<int>(knots.size()) - 1;
  while (true) {
    double tot = static_cast<double>(total);
    if (std::abs(tot) > opt.divergence_cap) {
      out.value = tot;
      out.abs_error = static_cast<double>(toterr);
      out.divergent = true;
      return out;
    }
    double target = std::max(opt.abs_floor, opt.rel_tol * std::abs(tot));
    if (bad_cells == 0 && static_cast<double>(toterr) <= target) {
      out.value = tot;
      out.abs_error = static_cast<double>(toterr);
      out.converged = true;
      return out;
    }
    if (evaluations >= opt.max_intervals || heap.empty()) break;
    Cell worst = heap.top();
    heap.pop();
    total -= worst.value;
    if (worst.bad) --bad_cells;
    else toterr -= worst.err;
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      if (worst.bad) {
        // non-finite sample at floating-point resolution: divergent
        out.value = std::numeric_limits<double>::infinity();
        out.abs_error = std::numeric_limits<double>::infinity();
        out.divergent = true;
        return out;
      }
      // interval at floating-point resolution: keep value, drop its error
      total += worst.value;
      ++evaluations;
      continue;
    }
    Cell l = evaluate_cell(f, worst.a, mid), r = evaluate_cell(f, mid, worst.b);
    push(l);
    push(r);
    evaluations += 2;
  }
  out.value = static_cast<double>(total);
  out.abs_error = static_cast<double>(toterr);
  out.converged = false;
  if (bad_cells > 0) {
    // non-finite samples persisted at the smallest refined scale
    out.divergent = true;
    out.value = std::numeric_limits<double>::infinity();
  }
  return out;
}

IntegralResult radial_integral(const std::function<double(double)>& g,
                               const Ball& ball, double rel_tol,
                               std::span<const double> breakpoints) {
  const int n = ball.n;
  const double sig = ball.sigma();
  auto weighted = [&, n, sig](double rho) {
    return sig * g(rho) * std::pow(rho, n - 1);
  };
  QuadratureOptions opt;
  opt.rel_tol = rel_tol;
  opt.geometric_left_seeds = true;
  opt.split_points.assign(breakpoints.begin(), breakpoints.end());
  return integrate(weighted, 0.0, ball.radius, opt);
}

}  // namespace orlicz
