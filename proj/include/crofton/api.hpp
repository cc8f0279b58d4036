#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crofton/io.hpp"

namespace crofton {

// JSON-level front door shared by the command line tool and the Python
// module. `certified` is false when only a bracket could be produced.
struct Outcome {
  Json json;
  bool certified = true;
};

Outcome length_report(const PathSpec& path, const Dyadic& eps, unsigned workers, int digits);

// route: "auto" (direct oracle for polynomials, length route otherwise),
// "length" or "direct".
Outcome variation_report(const PathSpec& path, const Direction& d, const Dyadic& eps,
                         const std::string& route, int digits);

// Profile of theta -> v_{theta,P} over the crofton partition at eps.
// Sampled graphs throw CertificationUnavailable.
std::vector<ProfileSample> profile_samples(const PathSpec& path, int count, const Dyadic& eps,
                                           unsigned workers);
Json profile_json(const std::vector<ProfileSample>& samples, int digits);

// Exact dyadics a' >= a and b' <= b, a' < b'.
std::pair<Dyadic, Dyadic> decision_bounds(const mpq_class& a, const mpq_class& b);
Outcome decide_report(const PathSpec& path, const Direction& d, const mpq_class& a, const mpq_class& b,
                      int digits);

// Counterexample generators: family "sawtooth" (uses n) or "mixture" (uses bits).
PathSpec generate(const std::string& family, int n, const std::vector<int>& bits, bool tilted);

}  // namespace crofton
