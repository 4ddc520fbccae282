#pragma once

#include <map>
#include <string>

namespace orlicz {

// Dimension-indexed constants fixed once by the calibration driver (see
// tools) and shipped as a data file: beta(n) drives the growth exponent of
// the mean-product bound, mean_product_cn(n) its additive constant. Loaded
// from ORLICZ_CALIBRATION when set, else from the compiled data directory.
class Calibration {
 public:
  struct Entry {
    double beta = 1.0;
    double mean_product_cn = 1.0;
  };

  static Calibration load(const std::string& path);
  static const Calibration& instance();

  double beta(int n) const;
  double mean_product_cn(int n) const;
  bool has(int n) const { return by_dim_.count(n) > 0; }

  std::map<int, Entry> by_dim_;
};

}  // namespace orlicz
