#include <doctest.h>

#include "../support/reference.hpp"
#include "crofton/api.hpp"
#include "crofton/errors.hpp"
#include "crofton/io.hpp"

using namespace crofton;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational(" -7 ") == -7);
  CHECK(parse_rational("0.1") == mpq_class(1, 10));
  CHECK(parse_rational("-1.5e-3") == mpq_class(-3, 2000));
  CHECK(parse_rational("2E2") == 200);
  CHECK(parse_rational(".5") == mpq_class(1, 2));
  CHECK(parse_rational("5.") == 5);
  CHECK(parse_rational("6/4") == mpq_class(3, 2));
  CHECK(parse_rational("-1/3") == mpq_class(-1, 3));
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "e5", "1e", "--1", "1/x", "0x10"}) {
    CHECK_THROWS_AS(parse_rational(bad), InvalidInput);
  }
}

TEST_CASE("JSON numbers") {
  CHECK(rational_from_json(Json::parse("0.1")) == mpq_class(1, 10));
  CHECK(rational_from_json(Json::parse("1e-3")) == mpq_class(1, 1000));
  CHECK(rational_from_json(Json::parse("-12")) == -12);
  CHECK(rational_from_json(Json::parse("18446744073709551615")) == mpq_class(mpz_class("18446744073709551615")));
  CHECK(rational_from_json(Json("1/3")) == mpq_class(1, 3));
  CHECK_THROWS_AS(rational_from_json(Json::parse("null")), InvalidInput);
  CHECK_THROWS_AS(rational_from_json(Json::parse("[1]")), InvalidInput);
}

TEST_CASE("path specs from JSON") {
  PathSpec p = path_from_json(Json::parse(R"({"kind":"polyline","vertices":[[0,0],[0.5,"1/3"],[1,0]]})"));
  CHECK(p.as<Polyline>()->vertices[1] == Point{mpq_class(1, 2), mpq_class(1, 3)});
  PathSpec q = path_from_json(Json::parse(R"({"kind":"polynomial","x":[0,1],"y":[0,0,1]})"));
  CHECK(q.as<PolynomialPath>()->y == RationalPoly({0, 0, 1}));
  CHECK(path_from_json(Json::parse(R"({"kind":"sawtooth","n":4})")).as<SawtoothGraph>()->n == 4);
  CHECK(path_from_json(Json::parse(R"({"kind":"sawtooth-mixture","bits":[0,1]})")).as<SawtoothMixture>()->active() == 2);
  PathSpec s = path_from_json(
      Json::parse(R"({"kind":"sampled-graph","lipschitz":1,"samples":[[0,0],[0.5,0.25],[1,0]]})"));
  CHECK(s.as<SampledGraph>()->lipschitz == 1);

  for (const char* bad : {
           R"([])",
           R"({"vertices":[[0,0],[1,0]]})",
           R"({"kind":"spiral"})",
           R"({"kind":"polyline","vertices":[[0,0]]})",
           R"({"kind":"polyline","vertices":[[0,0,0],[1,0]]})",
           R"({"kind":"polyline","vertices":"none"})",
           R"({"kind":"sawtooth","n":0})",
           R"({"kind":"sawtooth","n":1.5})",
           R"({"kind":"sawtooth-mixture","bits":[1,1]})",
           R"({"kind":"sampled-graph","lipschitz":1,"samples":[[0,0],[1,5]]})",
       }) {
    CHECK_THROWS_AS(path_from_json(Json::parse(bad)), InvalidInput);
  }
}

TEST_CASE("path specs round trip through JSON") {
  ref::Rng rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    PathSpec p = PathSpec::polyline(rng.polyline());
    PathSpec back = path_from_json(Json::parse(path_to_json(p).dump()));
    REQUIRE(back.as<Polyline>()->vertices == p.as<Polyline>()->vertices);
  }
  PathSpec poly = PathSpec::polynomial(RationalPoly({mpq_class(1, 3), 2}), RationalPoly({0, mpq_class(-5, 7), 1}));
  PathSpec pb = path_from_json(path_to_json(poly));
  CHECK(pb.as<PolynomialPath>()->x == poly.as<PolynomialPath>()->x);
  CHECK(pb.as<PolynomialPath>()->y == poly.as<PolynomialPath>()->y);
  for (const PathSpec& s : {PathSpec::sawtooth_graph(5), PathSpec::sawtooth_mixture({0, 0, 1}), sampled_sawtooth(4, 3)}) {
    CHECK(path_to_json(path_from_json(path_to_json(s))) == path_to_json(s));
  }
}

TEST_CASE("angles") {
  auto check = [](const char* text, mpq_class value, bool times_pi) {
    AngleSpec a = parse_angle(text);
    CHECK(a.value == value);
    CHECK(a.times_pi == times_pi);
  };
  check("pi", 1, true);
  check("pi/4", mpq_class(1, 4), true);
  check("-pi/2", mpq_class(-1, 2), true);
  check("2pi/3", mpq_class(2, 3), true);
  check("3*pi/4", mpq_class(3, 4), true);
  check("0.5", mpq_class(1, 2), false);
  check("1/3", mpq_class(1, 3), false);
  CHECK_THROWS_AS(parse_angle("pi*2"), InvalidInput);
  CHECK_THROWS_AS(parse_angle("pi/0"), InvalidInput);

  CHECK(to_direction(parse_angle("pi/2")).exact() == Point{0, 1});
  CHECK(to_direction(parse_angle("-pi/2")).exact() == Point{0, 1});
  CHECK(to_direction(parse_angle("pi")).exact() == Point{1, 0});
  CHECK(to_direction(parse_angle("0")).exact() == Point{1, 0});
  Direction d = to_direction(parse_angle("pi/3"));
  CHECK(d.wx().contains(mpq_class(1, 2)));
  CHECK(d.wx().width() <= Dyadic::pow2(-80));
  Direction r = to_direction(parse_angle("1"));
  CHECK(std::fabs(r.wx().mid().to_double() - std::cos(1.0)) < 1e-15);
}

TEST_CASE("decimal output rounds outward") {
  Interval x = Interval::of(mpq_class(1, 3), Precision(80));
  Json j = interval_to_json(x, 6);
  CHECK(j["lo"] == "0.333333");
  CHECK(j["hi"] == "0.333334");
  Json n = interval_to_json(Interval(Dyadic(-1, -1)), 3);
  CHECK(n["lo"] == "-0.500");
  CHECK(n["hi"] == "-0.500");
  ref::Rng rng(82);
  for (int trial = 0; trial < 1000; ++trial) {
    mpq_class q = rng.rational(100, 1 << 20);
    Interval v = Interval::of(q, Precision(60));
    Json o = interval_to_json(v, static_cast<int>(rng.integer(1, 20)));
    REQUIRE(parse_rational(o["lo"].get<std::string>()) <= v.lo().to_rational());
    REQUIRE(parse_rational(o["hi"].get<std::string>()) >= v.hi().to_rational());
  }
}

TEST_CASE("tolerances") {
  mpq_class micro(1, 1000000);
  CHECK(parse_tolerance("1e-6").to_rational() <= micro);
  CHECK(micro - parse_tolerance("1e-6").to_rational() <= Dyadic::pow2(-80).to_rational());
  CHECK(parse_tolerance("1/4") == Dyadic(1, -2));
  CHECK_THROWS_AS(parse_tolerance("0"), InvalidInput);
  CHECK_THROWS_AS(parse_tolerance("-1"), InvalidInput);
}

TEST_CASE("reports") {
  PathSpec seg = PathSpec::polyline({{0, 0}, {1, 0}});
  Outcome l = length_report(seg, parse_tolerance("1e-9"), 1, 12);
  CHECK(l.certified);
  CHECK(l.json["kind"] == "two-sided-converged");
  CHECK(parse_rational(l.json["value"]["lo"].get<std::string>()) <= 1);
  CHECK(parse_rational(l.json["value"]["hi"].get<std::string>()) >= 1);

  Outcome s = length_report(sampled_sawtooth(6, 2), parse_tolerance("1e-3"), 1, 12);
  CHECK_FALSE(s.certified);
  CHECK(s.json["kind"] == "non-shrinking-bracket");

  Outcome v = variation_report(seg, to_direction(parse_angle("pi/3")), parse_tolerance("1e-9"), "auto", 12);
  CHECK(parse_rational(v.json["value"]["lo"].get<std::string>()) <= mpq_class(1, 2));
  CHECK(parse_rational(v.json["value"]["hi"].get<std::string>()) >= mpq_class(1, 2));
  CHECK_THROWS_AS(variation_report(seg, Direction::horizontal(), Dyadic(1, -10), "sideways", 12), InvalidInput);

  auto [a, b] = decision_bounds(mpq_class(1, 3), mpq_class(2, 3));
  CHECK(a.to_rational() >= mpq_class(1, 3));
  CHECK(b.to_rational() <= mpq_class(2, 3));
  CHECK(a < b);
  CHECK_THROWS_AS(decision_bounds(1, 1), InvalidInput);
  // v = 1 lies above b, so only one verdict is true.
  Outcome verdict = decide_report(seg, Direction::horizontal(), mpq_class(1, 2), mpq_class(9, 10), 12);
  CHECK(verdict.json["verdict"] == "greater-than-a");
  Outcome below = decide_report(seg, Direction::horizontal(), mpq_class(11, 10), mpq_class(3, 2), 12);
  CHECK(below.json["verdict"] == "less-than-b");

  auto samples = profile_samples(PathSpec::polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}), 4,
                                 parse_tolerance("1e-6"), 1);
  REQUIRE(samples.size() == 5);
  CHECK(samples[0].value.contains(Dyadic(2)));
  CHECK(samples[2].value.contains(Dyadic(2)));
  std::string csv = profile_csv(samples, 6);
  CHECK(csv.rfind("theta_lo,theta_hi,v_lo,v_hi\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  CHECK_THROWS_AS(profile_samples(sampled_sawtooth(3, 3), 4, Dyadic(1, -10), 1), CertificationUnavailable);

  CHECK(path_to_json(generate("sawtooth", 2, {}, true))["vertices"].size() == 9);
  CHECK(generate("mixture", 0, {0, 1}, false).as<Polyline>()->vertices.size() == 9);
  CHECK_THROWS_AS(generate("spiral", 1, {}, false), InvalidInput);
}
