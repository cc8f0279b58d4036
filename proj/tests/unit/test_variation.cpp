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

const Precision kP(64);

PathSpec segment() { return PathSpec::polyline({{0, 0}, {1, 0}}); }
PathSpec square_loop() { return PathSpec::polyline({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}); }

Interval pi_times(long num, long den) { return divide(pi(Precision(90)) * Interval(num), Interval(den), Precision(90)); }

Direction angle(long num, long den) { return Direction::from_angle(pi_times(num, den)); }

bool encloses_sqrt(const Interval& x, const mpq_class& q) {
  return x.lo().sign() >= 0 && x.lo().to_rational() * x.lo().to_rational() <= q &&
         x.hi().to_rational() * x.hi().to_rational() >= q;
}

Interval random_angle(ref::Rng& rng) {
  return Interval(Dyadic::from_double(rng.real(-4, 7)));
}

}  // namespace

TEST_CASE("directional variation examples") {
  Partition t = Partition::trivial();
  CHECK(directional_variation(segment(), t, Direction::horizontal()).contains(Dyadic(1)));
  CHECK(directional_variation(segment(), t, Direction::vertical()).contains(Dyadic(0)));
  CHECK(directional_variation(segment(), t, angle(1, 2)).contains(Dyadic(0)));
  for (int n = 1; n <= 5; ++n) {
    PathSpec saw = PathSpec::sawtooth_graph(n);
    Partition v = *canonical_partition(saw);
    CHECK(directional_variation(saw, v, Direction::vertical()) == Interval(1));
    CHECK(directional_variation(saw, v, Direction::horizontal()) == Interval(1));
    CHECK(directional_variation(saw, v, angle(1, 2)).contains(Dyadic(1)));
  }
  Interval diag = directional_variation(square_loop(), *canonical_partition(square_loop()), angle(1, 4));
  CHECK(encloses_sqrt(diag, 8));
  Interval third = directional_variation(segment(), t, angle(1, 3));
  CHECK(third.contains(Dyadic(1, -1)));
  CHECK(third.width() <= Dyadic::pow2(-60));
}

TEST_CASE("variation profile examples") {
  auto seg = variation_profile(segment(), Partition::trivial(), 2);
  REQUIRE(seg.size() == 3);
  CHECK(seg[0].value.contains(Dyadic(1)));
  CHECK(seg[1].value.contains(Dyadic(0)));
  CHECK(seg[2].value.contains(Dyadic(1)));

  auto sq = variation_profile(square_loop(), *canonical_partition(square_loop()), 4);
  REQUIRE(sq.size() == 5);
  CHECK(sq[0].value.contains(Dyadic(2)));
  for (const auto& s : sq) {
    CHECK(s.value.hi() >= Dyadic(2) - Dyadic::pow2(-50));
    CHECK(s.value.lo() <= Dyadic::from_double(2 * std::sqrt(2.0) + 1e-9));
  }
  CHECK(encloses_sqrt(sq[1].value, 8));

  auto saw = variation_profile(PathSpec::sawtooth_graph(1), Partition({0, Dyadic(1, -1), 1}), 4);
  CHECK(encloses_sqrt(saw[1].value, mpq_class(1, 2)));
  CHECK(saw[0].value.overlaps(saw[4].value));
}

TEST_CASE("cosine form agrees with the inner-product form") {
  ref::Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    PathSpec path = PathSpec::polyline(rng.polyline());
    Partition p = rng.partition(static_cast<int>(rng.integer(0, 5)));
    Interval theta = random_angle(rng);
    Interval a = directional_variation(path, p, Direction::from_angle(theta));
    Interval b = directional_variation_cosine_form(chord_stats(path, p), theta, kP);
    REQUIRE(a.overlaps(b));
  }
}

TEST_CASE("direction Lipschitz bound") {
  CHECK(direction_lipschitz_bound(Interval(1)) == Interval(2));
  CHECK(direction_lipschitz_bound(Interval(0)) == Interval(0));
  Interval saw = direction_lipschitz_bound(polyline_length(PathSpec::sawtooth_graph(3), Partition::uniform_pow2(4)));
  CHECK(encloses_sqrt(saw, 8));

  ref::Rng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    PathSpec path = PathSpec::polyline(rng.polyline());
    Partition p = rng.partition(static_cast<int>(rng.integer(0, 5)));
    Interval t1 = random_angle(rng), t2 = random_angle(rng);
    Interval lhs = abs(directional_variation(path, p, Direction::from_angle(t1)) -
                       directional_variation(path, p, Direction::from_angle(t2)));
    Interval rhs = direction_lipschitz_bound(polyline_length(path, p)) * abs(t1 - t2);
    REQUIRE(lhs.hi() <= rhs.hi());
  }
}

TEST_CASE("two-direction bound examples") {
  CHECK(two_direction_length_bound(pi_times(1, 2)).contains(Dyadic(1)));
  Interval r3 = two_direction_length_bound(pi_times(1, 3));
  CHECK(std::fabs(r3.mid().to_double() - 1 / std::sin(M_PI / 3)) < 1e-12);
  CHECK(std::fabs(1 / ref::grid_pair_min(M_PI / 3, 10000) - 1 / std::sin(M_PI / 3)) < 1e-6);
  CHECK_THROWS_AS(two_direction_length_bound(Interval(0)), DomainError);
  CHECK_THROWS_AS(two_direction_length_bound(pi(Precision(80))), DomainError);
  CHECK_THROWS_AS(two_direction_length_bound(Interval(Dyadic(-1), Dyadic(1))), DomainError);

  Partition t = Partition::trivial();
  Interval bound = two_direction_length_bound(pi_times(1, 2)) *
                   (directional_variation(segment(), t, Direction::horizontal()) +
                    directional_variation(segment(), t, Direction::vertical()));
  CHECK(bound.contains(Dyadic(1)));
}

TEST_CASE("pair cosine minimum matches sin gamma and the grid oracle") {
  Dyadic tol = Dyadic::pow2(-24);
  for (double g : {0.05, 0.3, 1.0, M_PI / 2, 2.0, 3.0}) {
    Interval gamma(Dyadic::from_double(g));
    Interval c = pair_cosine_minimum(gamma, tol);
    CHECK(c.width() <= tol);
    CHECK(c.overlaps(sin(gamma, kP)));
    CHECK(std::fabs(c.mid().to_double() - ref::grid_pair_min(g, 10000)) < 1e-6);
  }
}

TEST_CASE("two-direction bound holds on random polygons") {
  ref::Rng rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    PathSpec path = PathSpec::polyline(rng.polyline());
    Partition p = rng.partition(static_cast<int>(rng.integer(0, 5)));
    double th = rng.real(0, M_PI), g = rng.real(0.05, M_PI - 0.05);
    Interval theta(Dyadic::from_double(th)), gamma(Dyadic::from_double(g));
    Interval rhs = two_direction_length_bound(gamma) *
                   (directional_variation(path, p, Direction::from_angle(theta)) +
                    directional_variation(path, p, Direction::from_angle(theta + gamma)));
    REQUIRE(polyline_length(path, p).lo() <= rhs.hi());
  }
}

TEST_CASE("variation grows under refinement and is pi-periodic") {
  ref::Rng rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    PathSpec path = PathSpec::polyline(rng.polyline());
    Partition p = rng.partition(3), q = rng.partition(3);
    Partition m = merge_partitions(p, q);
    Interval theta = random_angle(rng);
    Direction d = Direction::from_angle(theta);
    REQUIRE(directional_variation(path, p, d).lo() <= directional_variation(path, m, d).hi());
    Direction shifted = Direction::from_angle(theta + pi(Precision(90)));
    REQUIRE(directional_variation(path, p, d).overlaps(directional_variation(path, p, shifted)));
  }
}

TEST_CASE("length upper bound examples") {
  PolylineOracle seg(segment());
  CHECK(length_upper_bound(seg).contains(Dyadic(1)));
  PolylineOracle saw(PathSpec::sawtooth_graph(3));
  CHECK(length_upper_bound(saw).contains(Dyadic(2)));
  PolylineOracle sq(square_loop());
  CHECK(length_upper_bound(sq).contains(Dyadic(4)));
}

TEST_CASE("integrated profile encloses twice the polygon length") {
  ref::Rng rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    PathSpec path = PathSpec::polyline(rng.polyline());
    Partition p = rng.partition(3);
    auto chords = chord_vectors(path, p);
    Interval l = polyline_length(chords, kP);
    Interval integral = integrate_profile(chords, 512, kP);
    REQUIRE(integral.overlaps(l.ldexp(1)));
    REQUIRE(integral.lo() <= l.ldexp(1).lo());
    REQUIRE(integral.hi() >= l.ldexp(1).hi());
  }
}
