#pragma once

#include <string>

#include "orlicz/radial_profile.hpp"

namespace orlicz {

// Parse a profile specification into a RadialProfile on [0, domain_hint]
// (shortcut forms) or on the domain the pieces declare (JSON form).
// Accepted inputs:
//   "const:VAL"   constant VAL
//   "log:ALPHA"   ALPHA * log(1/rho)
//   inline JSON   {"pieces":[{"kind":"power","a":..,"b":..,"p":..,
//                             "from":0,"to":0.1}, ...]}
//       kinds: "constant" (c), "power" (a, b, p), "log" (alpha),
//              "bump" (height); every piece carries from/to
//   "@path"       JSON of the same shape read from a file
std::string describe_profile(const RadialProfile& f);
RadialProfile parse_profile(const std::string& spec, double domain_hint = 1.0);

}  // namespace orlicz
