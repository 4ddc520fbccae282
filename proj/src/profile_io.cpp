#include "orlicz/profile_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace orlicz {

namespace {

RadialProfile from_json(const nlohmann::json& j) {
  using namespace profiles;
  if (!j.contains("pieces") || !j["pieces"].is_array() || j["pieces"].empty())
    throw std::invalid_argument("parse_profile: expected a nonempty pieces array");
  Builder builder;
  bool c1 = true;
  double log_alpha = 0.0;
  for (const auto& pj : j["pieces"]) {
    const std::string kind = pj.at("kind").get<std::string>();
    double from = pj.at("from").get<double>();
    double to = pj.at("to").get<double>();
    if (kind == "constant") {
      builder.append_constant(from, to, pj.at("c").get<double>());
    } else if (kind == "power") {
      builder.append(from, to,
                     make_power_piece(pj.at("a").get<double>(),
                                      pj.at("b").get<double>(),
                                      pj.at("p").get<double>()));
    } else if (kind == "log") {
      double alpha = pj.at("alpha").get<double>();
      builder.append(from, to, make_log_piece(alpha));
      if (from == 0.0) log_alpha = alpha;
    } else if (kind == "bump") {
      builder.append(from, to,
                     make_bump_piece(pj.at("height").get<double>(), from, to));
    } else {
      throw std::invalid_argument("parse_profile: unknown piece kind " + kind);
    }
  }
  if (j["pieces"].size() > 1) c1 = false;  // joins are not certified smooth
  RadialProfile out = std::move(builder).finish(
      c1 ? Continuity::kC1 : Continuity::kPiecewise, log_alpha);
  return out;
}

}  // namespace

RadialProfile parse_profile(const std::string& spec, double domain_hint) {
  if (spec.rfind("const:", 0) == 0) {
    double v = std::stod(spec.substr(6));
    return profiles::constant(v, domain_hint);
  }
  if (spec.rfind("log:", 0) == 0) {
    double alpha = std::stod(spec.substr(4));
    return profiles::log_inverse(alpha, domain_hint);
  }
  nlohmann::json j;
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in)
      throw std::invalid_argument("parse_profile: cannot open " +
                                  spec.substr(1));
    in >> j;
  } else if (spec.find('{') != std::string::npos) {
    j = nlohmann::json::parse(spec);
  } else {
    throw std::invalid_argument("parse_profile: unrecognized spec " + spec);
  }
  return from_json(j);
}

std::string describe_profile(const RadialProfile& f) {
  std::ostringstream os;
  os << f.piece_count() << " piece(s) on [0, " << f.domain_max() << "]";
  if (f.unbounded_at_zero())
    os << ", log singularity coefficient " << f.log_alpha();
  return os.str();
}

}  // namespace orlicz
