#pragma once

#include <cmath>
#include <stdexcept>

namespace orlicz {

// Euclidean ball B_R in R^n centered at the origin. sigma() is the surface
// measure of the unit sphere S^{n-1}; measure() is the Lebesgue volume.
struct Ball {
  int n;
  double radius;

  Ball(int dim, double R) : n(dim), radius(R) {
    if (dim < 2) throw std::invalid_argument("Ball: dimension must be >= 2");
    if (!(R > 0.0) || !std::isfinite(R))
      throw std::invalid_argument("Ball: radius must be positive and finite");
  }

  double sigma() const {
    return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
  }
  double measure() const { return sigma() * std::pow(radius, n) / n; }
  // volume of the concentric sub-ball of radius rho <= radius
  double measure_at(double rho) const {
    return sigma() * std::pow(rho, n) / n;
  }
  Ball with_radius(double R) const { return Ball(n, R); }
};

}  // namespace orlicz
