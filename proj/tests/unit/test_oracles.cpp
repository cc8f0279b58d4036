#include <doctest.h>

#include <cmath>

#include "../support/reference.hpp"
#include "crofton/chords.hpp"
#include "crofton/elementary.hpp"
#include "crofton/errors.hpp"
#include "crofton/oracle.hpp"
#include "crofton/variation.hpp"

using namespace crofton;

namespace {

PathSpec segment() { return PathSpec::polyline({{0, 0}, {1, 0}}); }
PathSpec parabola() { return PathSpec::polynomial(RationalPoly({0, 1}), RationalPoly({0, 0, 1})); }

Direction angle(long num, long den) {
  return Direction::from_angle(divide(pi(Precision(90)) * Interval(num), Interval(den), Precision(90)));
}

bool encloses_sqrt(const Interval& x, const mpq_class& q) {
  return x.lo().sign() >= 0 && x.lo().to_rational() * x.lo().to_rational() <= q &&
         x.hi().to_rational() * x.hi().to_rational() >= q;
}

Direction random_rational_direction(ref::Rng& rng) {
  return Direction::from_stereographic(mpq_class(rng.integer(-64, 64), 64));
}

}  // namespace

TEST_CASE("polyline oracle examples") {
  PolylineOracle seg(segment());
  for (Dyadic eps : {Dyadic(1), Dyadic::pow2(-40)}) {
    VariationWitness w = seg.achieve_variation(angle(1, 3), eps);
    CHECK(w.variation.contains(Dyadic(1, -1)));
    CHECK(w.defect.is_zero());
    CHECK(w.partition == Partition::trivial());
  }
  PolylineOracle sq(PathSpec::polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}));
  CHECK(encloses_sqrt(sq.achieve_variation(angle(1, 4), Dyadic::pow2(-20)).variation, 8));

  PolylineOracle flat(PathSpec::sawtooth_mixture({0, 0, 0}));
  CHECK(flat.achieve_length(Dyadic::pow2(-20)).length.contains(Dyadic(1)));
  CHECK(flat.achieve_variation(Direction::vertical(), Dyadic::pow2(-20)).variation == Interval(0));
  CHECK(flat.id() == "polyline-vertex");
  CHECK(flat.exact_partition());

  CHECK_THROWS_AS(PolylineOracle{parabola()}, InvalidInput);
}

TEST_CASE("polynomial variation oracle examples") {
  PolynomialOracle par(parabola());
  VariationWitness up = par.achieve_variation(Direction::vertical(), Dyadic::pow2(-10));
  CHECK(up.partition == Partition::trivial());
  CHECK(up.variation == Interval(1));

  PolynomialOracle dip(PathSpec::polynomial(RationalPoly({0, 1}), RationalPoly({0, -1, 1})));
  VariationWitness d = dip.achieve_variation(Direction::vertical(), Dyadic::pow2(-10));
  CHECK(d.partition == Partition({0, Dyadic(1, -1), 1}));
  CHECK(d.variation == Interval(Dyadic(1, -1)));
  CHECK(d.defect.is_zero());

  CHECK(par.achieve_variation(Direction::horizontal(), Dyadic::pow2(-10)).variation == Interval(1));

  // Irrational critical point: y = t^3 - t/3 has its minimum at 1/3.
  PolynomialOracle cubic(PathSpec::polynomial(RationalPoly({0, 1}), RationalPoly({0, mpq_class(-1, 3), 0, 1})));
  VariationWitness c = cubic.achieve_variation(Direction::vertical(), Dyadic::pow2(-30));
  // |r(1/3) - r(0)| + |r(1) - r(1/3)| = 2/27 + 2/3 + 2/27.
  mpq_class exact = mpq_class(2, 27) + mpq_class(2, 3) + mpq_class(2, 27);
  CHECK(c.variation.lo().to_rational() <= exact);
  CHECK(exact <= c.variation.hi().to_rational() + c.defect.to_rational());
  CHECK(c.defect <= Dyadic::pow2(-30));

  PolynomialOracle flat(PathSpec::polynomial(RationalPoly({0, 1}), RationalPoly()));
  VariationWitness f = flat.achieve_variation(Direction::vertical(), Dyadic::pow2(-3));
  CHECK(f.variation == Interval(0));
  CHECK(f.defect.is_zero());
}

TEST_CASE("polynomial oracle serves interval directions by snapping") {
  PolynomialOracle par(parabola());
  Direction d = angle(1, 3);
  Dyadic eps = Dyadic::pow2(-12);
  VariationWitness w = par.achieve_variation(d, eps);
  CHECK(w.defect <= eps);
  // v = sup over t of the projection's total variation; r(t) = t/2 + sqrt(3) t^2 / 2 is monotone.
  double v = 0.5 + std::sqrt(3.0) / 2;
  CHECK(w.variation.lo().to_double() <= v + 1e-12);
  CHECK(v <= w.variation.hi().to_double() + w.defect.to_double() + 1e-12);
}

TEST_CASE("polynomial length oracle examples") {
  PolynomialOracle line(PathSpec::polynomial(RationalPoly({0, 1}), RationalPoly()));
  LengthWitness l = line.achieve_length(Dyadic::pow2(-20));
  CHECK(l.length.contains(Dyadic(1)));

  PolynomialOracle diag(PathSpec::polynomial(RationalPoly({0, 1}), RationalPoly({0, 1})));
  CHECK(encloses_sqrt(diag.achieve_length(Dyadic::from_double(1e-6)).length, 2));

  PolynomialOracle par(parabola());
  Dyadic eps = Dyadic::from_double(1e-3);
  LengthWitness p = par.achieve_length(eps);
  double reference = static_cast<double>(ref::parabola_length());
  CHECK(p.length.lo().to_double() <= reference);
  CHECK(reference - p.length.lo().to_double() <= 1e-3);
  CHECK(p.defect <= eps);
  CHECK(par.upper_bound().to_double() >= reference);
}

TEST_CASE("oracle factories") {
  CHECK(make_variation_oracle(segment())->id() == "polyline-vertex");
  CHECK(make_variation_oracle(PathSpec::sawtooth_graph(2))->id() == "polyline-vertex");
  CHECK(make_length_oracle(parabola())->id() == "polynomial-sturm");
  PathSpec sampled = PathSpec::sampled_graph({{0, 0}, {1, 0}}, 1);
  CHECK_THROWS_AS(make_variation_oracle(sampled), CertificationUnavailable);
  CHECK_THROWS_AS(make_length_oracle(sampled), CertificationUnavailable);
}

TEST_CASE("sampled bracket examples") {
  Direction up = angle(1, 2);
  PathSpec zero = PathSpec::sampled_graph({{0, 0}, {mpq_class(1, 2), 0}, {1, 0}}, 1);
  Certificate z = sampled_bracket(zero, up);
  CHECK(z.kind() == CertificateKind::kNonShrinkingBracket);
  CHECK(z.value().contains(Interval(Dyadic(0), Dyadic(1) - Dyadic::pow2(-40))));
  CHECK(z.value().hi() <= Dyadic(1) + Dyadic::pow2(-40));

  std::vector<Point> aligned, coarse;
  PathSpec f3 = PathSpec::sawtooth_graph(3);
  for (long i = 0; i <= 16; ++i) aligned.push_back(f3.exact_point(Dyadic(mpz_class(i), -4)));
  for (long i = 0; i <= 4; ++i) coarse.push_back(f3.exact_point(Dyadic(mpz_class(i), -2)));
  Certificate a = sampled_bracket(PathSpec::sampled_graph(aligned, 1), Direction::vertical());
  CHECK(a.value() == Interval(1));
  Certificate c = sampled_bracket(PathSpec::sampled_graph(coarse, 1), Direction::vertical());
  CHECK(c.value() == Interval(0, 1));

  Certificate len = sampled_length_bracket(PathSpec::sampled_graph(coarse, 1));
  CHECK(len.value().contains(Dyadic(1)));
  CHECK(len.value().hi().to_rational() * len.value().hi().to_rational() >= 2);
  CHECK_THROWS_AS(sampled_bracket(segment(), up), InvalidInput);
}

TEST_CASE("polyline oracle is never beaten by a refinement") {
  ref::Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    PathSpec path = PathSpec::polyline(rng.polyline());
    PolylineOracle oracle(path);
    Direction d = Direction::from_angle(Interval(Dyadic::from_double(rng.real(0, M_PI))));
    Dyadic eps = Dyadic::pow2(-20);
    VariationWitness w = oracle.achieve_variation(d, eps);
    for (int q = 0; q < 250; ++q) {
      Partition part = rng.partition(static_cast<int>(rng.integer(1, 12)), 10);
      REQUIRE(directional_variation(path, part, d).lo() <= w.variation.hi() + w.defect);
    }
  }
}

TEST_CASE("polynomial oracle is never beaten by a random partition") {
  ref::Rng rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<mpq_class> xs, ys;
    int dx = static_cast<int>(rng.integer(1, 5)), dy = static_cast<int>(rng.integer(1, 5));
    for (int i = 0; i <= dx; ++i) xs.push_back(rng.rational(3, 4));
    for (int i = 0; i <= dy; ++i) ys.push_back(rng.rational(3, 4));
    PathSpec path = PathSpec::polynomial(RationalPoly(xs), RationalPoly(ys));
    PolynomialOracle oracle(path);
    Direction d = random_rational_direction(rng);
    VariationWitness w = oracle.achieve_variation(d, Dyadic::pow2(-16));
    for (int q = 0; q < 35; ++q) {
      Partition part = rng.partition(static_cast<int>(rng.integer(1, 16)), 12);
      REQUIRE(directional_variation(path, part, d).lo() <= w.variation.hi() + w.defect);
    }
  }
}

TEST_CASE("sampled brackets contain the variation of the sampled polygon") {
  ref::Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    int k = static_cast<int>(rng.integer(1, 4));
    long cells = 1L << k;
    std::vector<Point> pts;
    mpq_class lip = 0;
    for (long i = 0; i <= cells; ++i) {
      pts.push_back({mpq_class(i, cells), rng.rational(1, 8)});
      pts.back().x.canonicalize();
      if (i > 0) lip = std::max(lip, mpq_class(abs(pts[i].y - pts[i - 1].y) * cells));
    }
    PathSpec graph = PathSpec::polyline(pts);
    PathSpec sampled = PathSpec::sampled_graph(pts, lip);
    Direction d = random_rational_direction(rng);
    Interval truth = directional_variation(graph, *canonical_partition(graph), d);
    REQUIRE(sampled_bracket(sampled, d).value().contains(truth));
  }
}

TEST_CASE("polynomial length oracle meets its gap") {
  ref::Rng rng(54);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<mpq_class> xs{0, 1}, ys;
    for (int i = 0; i <= 3; ++i) ys.push_back(rng.rational(2, 4));
    PathSpec path = PathSpec::polynomial(RationalPoly(xs), RationalPoly(ys));
    PolynomialOracle oracle(path);
    RationalPoly dy = RationalPoly(ys).derivative();
    long double arc = ref::integrate(
        [&](long double t) {
          long double s = dy.evaluate(Interval(Dyadic::from_double(static_cast<double>(t))), Precision(60)).mid().to_double();
          return std::sqrt(1 + s * s);
        },
        0, 1);
    for (int bits : {8, 16, 24}) {
      Dyadic eps = Dyadic::pow2(-bits);
      LengthWitness w = oracle.achieve_length(eps);
      REQUIRE(w.defect <= eps);
      REQUIRE(w.length.lo().to_double() <= arc + 1e-12L);
      REQUIRE(arc - w.length.lo().to_double() <= eps.to_double() + 1e-12L);
    }
  }
}
