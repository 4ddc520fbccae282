#pragma once

#include <functional>
#include <vector>

#include "orlicz/ball.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

// Piecewise-constant radial sampling of |f| on a ball: cell i covers radii
// [edges[i], edges[i+1]) and carries the absolute value at the cell's
// midpoint. The resolution bound for rearrangement statements is the cell
// measure, reported by max_cell_measure().
struct RadialSamples {
  Ball ball;
  std::vector<double> edges;
  std::vector<double> values;

  static RadialSamples from_profile(const RadialProfile& f, const Ball& ball,
                                    int cells);
  static RadialSamples from_evaluator(const std::function<double(double)>& f,
                                      const Ball& ball, int cells);

  double cell_measure(std::size_t i) const;
  double max_cell_measure() const;
};

// Nonincreasing radial step profile equimeasurable with the samples: cells
// sorted by value, descending, laid out from the origin.
RadialProfile rearrange(const RadialSamples& s);

// measure of { |f| > t } computed from the samples
double distribution_function(const RadialSamples& s, double t);

// convenience: sample a profile, then measure its superlevel set
double distribution_function(const RadialProfile& f, const Ball& ball,
                             double t, int cells = 200000);

}  // namespace orlicz
