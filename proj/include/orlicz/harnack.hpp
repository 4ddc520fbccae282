#pragma once

#include <array>

#include "orlicz/ball.hpp"
#include "orlicz/radial_profile.hpp"

namespace orlicz {

// The six-quantity chain behind the Harnack bound for a nonnegative radial
// profile: sup over B_{R0}, exponential-class gauges of ubar = u + gauge +
// eps_shift and its reciprocal on B_{2R0}, Lebesgue n/r norms on B_{4R0},
// and the inf over B_{R0}. ratios[i] is quantity[i]/quantity[i+1];
// harnack_quotient is sup/(inf + gauge + eps_shift) on B_{R0}.
struct ChainQuantities {
  std::array<double, 6> values{};  // s1..s6
  std::array<double, 5> ratios{};
  double harnack_quotient = 0.0;
  double gauge = 0.0;
  double eps_shift = 0.0;
  bool finite = true;
};

// requires 4 R0 <= domain radius and u >= 0 on B_{4R0}
ChainQuantities harnack_chain(const RadialProfile& u, const Ball& domain,
                              double R0, double r, double gauge,
                              double eps_shift, double tol);

// Scale transfer of the log-type gauge: with hhat(x) = roh^n h(roh x),
// roh = R/R0 <= 1, verifies
//   ||hhat||_{(N_r), B_{8 R0}} <= ||h||_{(N_r), B_{8R}}
// which lets results on the unit scale transfer to small balls.
struct DilationReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};
DilationReport dilation_check(const RadialProfile& h, int n, double r,
                              double R, double R0, double tol);

}  // namespace orlicz
