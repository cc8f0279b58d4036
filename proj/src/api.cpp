#include "crofton/api.hpp"

#include "crofton/errors.hpp"
#include "crofton/oracle.hpp"
#include "crofton/rectify.hpp"

namespace crofton {

Outcome length_report(const PathSpec& path, const Dyadic& eps, unsigned workers, int digits) {
  if (path.as<SampledGraph>()) return {certificate_to_json(sampled_length_bracket(path), digits), false};
  auto oracle = make_variation_oracle(path);
  return {certificate_to_json(certified_length(*oracle, eps, workers), digits)};
}

Outcome variation_report(const PathSpec& path, const Direction& d, const Dyadic& eps,
                         const std::string& route, int digits) {
  if (path.as<SampledGraph>()) return {certificate_to_json(sampled_bracket(path, d), digits), false};
  std::string r = route;
  if (r == "auto") r = path.as<PolynomialPath>() ? "direct" : "length";
  if (r == "length") return {certificate_to_json(certified_variation(*make_length_oracle(path), d, eps), digits)};
  if (r == "direct") return {certificate_to_json(direct_variation(*make_variation_oracle(path), d, eps), digits)};
  throw InvalidInput("unknown route '" + route + "'");
}

std::vector<ProfileSample> profile_samples(const PathSpec& path, int count, const Dyadic& eps,
                                           unsigned workers) {
  if (count < 1) throw InvalidInput("profile count must be >= 1");
  auto oracle = make_variation_oracle(path);
  CroftonResult cr = crofton_partition(*oracle, eps, workers);
  return variation_profile(path, cr.partition, count);
}

Json profile_json(const std::vector<ProfileSample>& samples, int digits) {
  Json rows = Json::array();
  for (const auto& s : samples) {
    Json r;
    r["theta"] = interval_to_json(s.theta, digits);
    r["v"] = interval_to_json(s.value, digits);
    rows.push_back(r);
  }
  return rows;
}

std::pair<Dyadic, Dyadic> decision_bounds(const mpq_class& a, const mpq_class& b) {
  if (!(a < b)) throw InvalidInput("decide needs a < b");
  Precision p = precision_for(Dyadic::lower_bound_of(b - a, 8)) + 8;
  return {Dyadic::ceil_of(a, p), Dyadic::floor_of(b, p)};
}

Outcome decide_report(const PathSpec& path, const Direction& d, const mpq_class& a, const mpq_class& b,
                      int digits) {
  auto [da, db] = decision_bounds(a, b);
  if (path.as<SampledGraph>()) return {certificate_to_json(sampled_bracket(path, d), digits), false};
  Decision dec = variation_order_decide(*make_length_oracle(path), d, da, db);
  Json j;
  j["verdict"] = to_string(dec.verdict);
  return {j};
}

PathSpec generate(const std::string& family, int n, const std::vector<int>& bits, bool tilted) {
  if (family != "sawtooth" && family != "mixture") throw InvalidInput("unknown family '" + family + "'");
  PathSpec path = family == "sawtooth" ? sawtooth(n) : mixture(bits);
  return tilted ? tilt(path) : path;
}

}  // namespace crofton
