#include "orlicz/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace orlicz {

namespace {

std::vector<double> uniform_edges(double R, int cells) {
  if (cells < 1) throw std::invalid_argument("RadialSamples: cells >= 1");
  std::vector<double> e(cells + 1);
  for (int i = 0; i <= cells; ++i) e[i] = R * double(i) / cells;
  return e;
}

}  // namespace

RadialSamples RadialSamples::from_evaluator(
    const std::function<double(double)>& f, const Ball& ball, int cells) {
  RadialSamples s{ball, uniform_edges(ball.radius, cells), {}};
  s.values.reserve(cells);
  for (int i = 0; i < cells; ++i) {
    double mid = 0.5 * (s.edges[i] + s.edges[i + 1]);
    s.values.push_back(std::abs(f(mid)));
  }
  return s;
}

RadialSamples RadialSamples::from_profile(const RadialProfile& f,
                                          const Ball& ball, int cells) {
  if (ball.radius > f.domain_max() * (1.0 + 1e-12))
    throw std::invalid_argument("RadialSamples: profile domain smaller than ball");
  return from_evaluator([&f](double rho) { return f.value(rho); }, ball,
                        cells);
}

double RadialSamples::cell_measure(std::size_t i) const {
  double n = ball.n;
  return ball.sigma() / n *
         (std::pow(edges[i + 1], n) - std::pow(edges[i], n));
}

double RadialSamples::max_cell_measure() const {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    best = std::max(best, cell_measure(i));
  return best;
}

RadialProfile rearrange(const RadialSamples& s) {
  const std::size_t m = s.values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.values[a] > s.values[b];
  });
  // cumulative measures of the sorted cells give the new radii
  const int n = s.ball.n;
  const double sig = s.ball.sigma();
  std::vector<double> breaks{0.0};
  std::vector<Piece> pieces;
  double acc = 0.0;
  for (std::size_t k = 0; k < m;) {
    double v = s.values[order[k]];
    // merge a run of equal values into one step
    while (k < m && s.values[order[k]] == v) {
      acc += s.cell_measure(order[k]);
      ++k;
    }
    double radius = std::pow(acc * n / sig, 1.0 / n);
    if (radius <= breaks.back()) continue;  // zero-measure run
    breaks.push_back(radius);
    pieces.push_back(profiles::make_constant_piece(v));
  }
  if (pieces.empty()) {
    breaks.push_back(s.ball.radius);
    pieces.push_back(profiles::make_constant_piece(0.0));
  }
  // land exactly on the ball radius despite rounding
  breaks.back() = s.ball.radius;
  return RadialProfile(std::move(breaks), std::move(pieces),
                       Continuity::kPiecewise);
}

double distribution_function(const RadialSamples& s, double t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i)
    if (s.values[i] > t) acc += s.cell_measure(i);
  return acc;
}

double distribution_function(const RadialProfile& f, const Ball& ball,
                             double t, int cells) {
  return distribution_function(RadialSamples::from_profile(f, ball, cells), t);
}

}  // namespace orlicz
