#include "crofton/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "crofton/elementary.hpp"
#include "crofton/errors.hpp"

namespace crofton {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!all_digits(body)) throw InvalidInput("not an integer: '" + s + "'");
  mpz_class z(body, 10);
  return neg ? mpz_class(-z) : z;
}

mpq_class parse_decimal(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  long exp10 = 0;
  if (auto e = body.find_first_of("eE"); e != std::string::npos) {
    mpz_class ez = parse_integer(body.substr(e + 1));
    if (!ez.fits_slong_p() || abs(ez) > 100000) throw InvalidInput("exponent out of range: '" + s + "'");
    exp10 = ez.get_si();
    body = body.substr(0, e);
  }
  std::string whole = body, frac;
  if (auto dot = body.find('.'); dot != std::string::npos) {
    whole = body.substr(0, dot);
    frac = body.substr(dot + 1);
  }
  if (whole.empty() && frac.empty()) throw InvalidInput("not a number: '" + s + "'");
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
    throw InvalidInput("not a number: '" + s + "'");
  }
  mpz_class digits((whole.empty() ? "0" : whole) + frac, 10);
  exp10 -= static_cast<long>(frac.size());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(digits, scale) : mpq_class(digits * scale);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

std::string rational_text(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(rational_text(q));
}

std::vector<Point> points_from_json(const Json& arr, const char* field) {
  if (!arr.is_array()) throw InvalidInput(std::string("'") + field + "' must be an array");
  std::vector<Point> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw InvalidInput(std::string("'") + field + "' entries must be pairs");
    out.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return out;
}

RationalPoly poly_from_json(const Json& arr, const char* field) {
  if (!arr.is_array()) throw InvalidInput(std::string("'") + field + "' must be an array");
  std::vector<mpq_class> c;
  for (const auto& v : arr) c.push_back(rational_from_json(v));
  return RationalPoly(std::move(c));
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + name + "'");
  return *it;
}

int int_from_json(const Json& v, const char* name) {
  if (!v.is_number_integer()) throw InvalidInput(std::string("'") + name + "' must be an integer");
  auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw InvalidInput(std::string("'") + name + "' out of range");
  }
  return static_cast<int>(x);
}

Json points_to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(Json::array({rational_to_json(p.x), rational_to_json(p.y)}));
  return arr;
}

Json poly_to_json(const RationalPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(rational_to_json(c));
  if (arr.empty()) arr.push_back(0);
  return arr;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw InvalidInput("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw InvalidInput("zero denominator: '" + text + "'");
    mpq_class q(parse_integer(trim(s.substr(0, slash))), den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(s);
}

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpq_class(mpz_class(std::to_string(j.get<unsigned long long>()), 10));
    return mpq_class(mpz_class(std::to_string(j.get<long long>()), 10));
  }
  if (j.is_number_float()) {
    // The shortest decimal that round-trips, so 0.1 means 1/10.
    double d = j.get<double>();
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, d);
    if (res.ec != std::errc()) throw InvalidInput("unrepresentable number");
    return parse_rational(std::string(buf, res.ptr));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a number, decimal string or 'p/q' string");
}

PathSpec path_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("path spec must be a JSON object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw InvalidInput("'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "polyline") return PathSpec::polyline(points_from_json(field(j, "vertices"), "vertices"));
  if (k == "polynomial") {
    return PathSpec::polynomial(poly_from_json(field(j, "x"), "x"), poly_from_json(field(j, "y"), "y"));
  }
  if (k == "sampled-graph") {
    return PathSpec::sampled_graph(points_from_json(field(j, "samples"), "samples"),
                                   rational_from_json(field(j, "lipschitz")));
  }
  if (k == "sawtooth") return PathSpec::sawtooth_graph(int_from_json(field(j, "n"), "n"));
  if (k == "sawtooth-mixture") {
    const Json& bits = field(j, "bits");
    if (!bits.is_array()) throw InvalidInput("'bits' must be an array");
    std::vector<int> b;
    for (const auto& v : bits) b.push_back(int_from_json(v, "bits"));
    return PathSpec::sawtooth_mixture(std::move(b));
  }
  throw InvalidInput("unknown path kind '" + k + "'");
}

Json path_to_json(const PathSpec& path) {
  Json j;
  j["kind"] = path.kind();
  if (const auto* p = path.as<Polyline>()) {
    j["vertices"] = points_to_json(p->vertices);
  } else if (const auto* p = path.as<PolynomialPath>()) {
    j["x"] = poly_to_json(p->x);
    j["y"] = poly_to_json(p->y);
  } else if (const auto* p = path.as<SampledGraph>()) {
    j["lipschitz"] = rational_to_json(p->lipschitz);
    j["samples"] = points_to_json(p->samples);
  } else if (const auto* p = path.as<SawtoothGraph>()) {
    j["n"] = p->n;
  } else if (const auto* p = path.as<SawtoothMixture>()) {
    j["bits"] = p->bits;
  }
  return j;
}

AngleSpec parse_angle(const std::string& text) {
  std::string s = trim(text);
  auto at = s.find("pi");
  if (at == std::string::npos) return {parse_rational(s), false};
  std::string coef = trim(s.substr(0, at));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  mpq_class c;
  if (coef.empty() || coef == "+") {
    c = 1;
  } else if (coef == "-") {
    c = -1;
  } else {
    c = parse_rational(coef);
  }
  std::string rest = trim(s.substr(at + 2));
  if (!rest.empty()) {
    if (rest[0] != '/') throw InvalidInput("malformed angle '" + text + "'");
    mpz_class den = parse_integer(trim(rest.substr(1)));
    if (den == 0) throw InvalidInput("zero denominator in angle '" + text + "'");
    c /= den;
  }
  return {c, true};
}

Direction to_direction(const AngleSpec& angle, Precision p) {
  if (angle.times_pi) {
    mpq_class twice = 2 * angle.value;
    if (twice.get_den() == 1) {
      return mpz_class(twice.get_num() % 2) == 0 ? Direction::horizontal() : Direction::vertical();
    }
    return Direction::from_angle(pi(p + 16) * Interval::of(angle.value, p + 16), p);
  }
  if (angle.value == 0) return Direction::horizontal();
  return Direction::from_angle(Interval::of(angle.value, p + 16), p);
}

Dyadic parse_tolerance(const std::string& text) {
  mpq_class q = parse_rational(text);
  if (q <= 0) throw InvalidInput("tolerance must be positive");
  return Dyadic::lower_bound_of(q, 64);
}

Json interval_to_json(const Interval& x, int digits) {
  Json j;
  j["lo"] = x.lo().to_decimal_floor(digits);
  j["hi"] = x.hi().to_decimal_ceil(digits);
  return j;
}

Json certificate_to_json(const Certificate& c, int digits) {
  const Provenance& prov = c.provenance();
  Json j;
  j["value"] = interval_to_json(c.value(), digits);
  j["kind"] = to_string(c.kind());
  j["tolerance"] = prov.tolerance.to_decimal_ceil(digits);
  j["partition_size"] = prov.partition ? prov.partition->size() : 0;
  j["net_size"] = prov.net ? prov.net->size : 0;
  Json budget = Json::object();
  for (const auto& [name, value] : prov.budget) budget[name] = value.to_decimal_ceil(digits);
  j["budget"] = budget;
  j["oracles"] = prov.oracles;
  return j;
}

Json demo_to_json(const DemoReport& r, int digits) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["grid_resolution"] = r.grid_resolution.to_decimal_floor(digits);
  j["feature_scale"] = r.feature_scale.to_decimal_floor(digits);
  j["sampled"] = certificate_to_json(r.sampled, digits);
  j["exact_variation"] = interval_to_json(r.exact, digits);
  j["note"] =
      "the sampled bracket uses only the samples and the Lipschitz constant; "
      "no finer sampling is guaranteed to shrink it";
  return j;
}

std::string profile_csv(const std::vector<ProfileSample>& samples, int digits) {
  std::ostringstream os;
  os << "theta_lo,theta_hi,v_lo,v_hi\n";
  for (const auto& s : samples) {
    os << s.theta.lo().to_decimal_floor(digits) << ',' << s.theta.hi().to_decimal_ceil(digits) << ','
       << s.value.lo().to_decimal_floor(digits) << ',' << s.value.hi().to_decimal_ceil(digits) << '\n';
  }
  return os.str();
}

}  // namespace crofton
