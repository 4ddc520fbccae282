#include "orlicz/calibration.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace orlicz {

Calibration Calibration::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("Calibration: cannot open " + path);
  nlohmann::json j;
  in >> j;
  Calibration cal;
  for (auto& [key, entry] : j.at("dim").items()) {
    Entry e;
    e.beta = entry.at("beta").get<double>();
    e.mean_product_cn = entry.at("mean_product_cn").get<double>();
    cal.by_dim_[std::stoi(key)] = e;
  }
  return cal;
}

const Calibration& Calibration::instance() {
  static Calibration cal = [] {
    const char* env = std::getenv("ORLICZ_CALIBRATION");
    std::string path =
        env ? std::string(env) : std::string(ORLICZ_DATA_DIR "/calibration.json");
    return load(path);
  }();
  return cal;
}

double Calibration::beta(int n) const {
  auto it = by_dim_.find(n);
  if (it == by_dim_.end())
    throw std::out_of_range("Calibration: no entry for dimension " +
                            std::to_string(n));
  return it->second.beta;
}

double Calibration::mean_product_cn(int n) const {
  auto it = by_dim_.find(n);
  if (it == by_dim_.end())
    throw std::out_of_range("Calibration: no entry for dimension " +
                            std::to_string(n));
  return it->second.mean_product_cn;
}

}  // namespace orlicz
