#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "crofton/certificate.hpp"
#include "crofton/counterexamples.hpp"
#include "crofton/direction.hpp"
#include "crofton/path.hpp"
#include "crofton/variation.hpp"

namespace crofton {

using Json = nlohmann::ordered_json;

// Integers, decimals with optional exponent ("-1.5e-3"), or "p/q".
mpq_class parse_rational(const std::string& text);
// JSON integers, strings as above, and floats converted exactly.
mpq_class rational_from_json(const Json& j);

PathSpec path_from_json(const Json& j);
Json path_to_json(const PathSpec& path);

// Angle in radians, possibly a rational multiple of pi: "0.5", "1/3",
// "pi", "pi/4", "-pi/2", "2pi/3", "3*pi/4".
struct AngleSpec {
  mpq_class value;
  bool times_pi = false;
};
AngleSpec parse_angle(const std::string& text);
// Multiples of pi/2 become the exact horizontal or vertical direction.
Direction to_direction(const AngleSpec& angle, Precision p = Precision(96));

// Positive tolerance, rounded down to a dyadic.
Dyadic parse_tolerance(const std::string& text);

// Outward-rounded fixed-point decimals.
Json interval_to_json(const Interval& x, int digits);
Json certificate_to_json(const Certificate& c, int digits);
Json demo_to_json(const DemoReport& r, int digits);
std::string profile_csv(const std::vector<ProfileSample>& samples, int digits);

}  // namespace crofton
