#include "crofton/variation.hpp"

#include <algorithm>
#include <bit>

#include "crofton/elementary.hpp"
#include "crofton/errors.hpp"

namespace crofton {
namespace {

int count_bits(std::size_t n) { return static_cast<int>(std::bit_width(n)); }

Interval theta_sample(long j, long count, Precision p) {
  return divide(pi(p + 8) * Interval(j), Interval(count), p + 4);
}

}  // namespace

Interval directional_variation(const std::vector<Point>& chords, const Direction& d, Precision p) {
  if (const auto& w = d.exact()) {
    mpq_class sum = 0;
    for (const Point& c : chords) sum += abs(w->x * c.x + w->y * c.y);
    return Interval::of(sum, p);
  }
  Precision wp = p + (count_bits(chords.size()) + 4);
  Interval sum;
  for (const Point& c : chords) {
    Interval dot = d.wx() * Interval::of(c.x, wp) + d.wy() * Interval::of(c.y, wp);
    sum += abs(dot).round(wp);
  }
  return sum.round(p + 2);
}

Interval directional_variation(const PathSpec& path, const Partition& partition, const Direction& d,
                               Precision p) {
  return directional_variation(chord_vectors(path, partition), d, p);
}

Interval directional_variation_cosine_form(const std::vector<ChordStats>& chords,
                                           const Interval& theta, Precision p) {
  Precision wp = p + (count_bits(chords.size()) + 4);
  Interval sum;
  for (const auto& c : chords) {
    if (c.degenerate()) continue;
    sum += (abs(cos(theta - *c.angle, wp)) * c.length).round(wp);
  }
  return sum.round(p + 2);
}

std::vector<ProfileSample> variation_profile(const PathSpec& path, const Partition& partition,
                                             int count, Precision p) {
  if (count < 1) throw InvalidInput("profile sample count must be >= 1");
  std::vector<Point> chords = chord_vectors(path, partition);
  std::vector<ProfileSample> out;
  out.reserve(static_cast<std::size_t>(count) + 1);
  for (long j = 0; j <= count; ++j) {
    Interval theta = theta_sample(j, count, p);
    Direction d = Direction::from_angle(theta, p + 8);
    out.push_back({theta, directional_variation(chords, d, p)});
  }
  return out;
}

Interval direction_lipschitz_bound(const Interval& polygon_length) {
  if (polygon_length.lo().sign() < 0) throw DomainError("polygon length must be nonnegative");
  return polygon_length.ldexp(1);
}

Interval two_direction_length_bound(const Interval& gamma, Precision p) {
  Interval pie = pi(p + 8);
  if (gamma.lo().sign() <= 0 || gamma.hi() >= pie.lo()) {
    throw DomainError("direction separation must lie strictly inside (0, pi)");
  }
  Interval s = sin(gamma, p + 8);
  if (s.lo().sign() <= 0) throw DomainError("direction separation too close to 0 or pi");
  return divide(Interval(1), s, p);
}

Interval pair_cosine_minimum(const Interval& gamma, const Dyadic& tol) {
  Precision wp = precision_for(tol) + 12;
  auto g = [&](const Interval& theta) {
    return abs(cos(theta, wp)) + abs(cos(theta + gamma, wp));
  };
  struct Cell {
    Dyadic a, b;
    Interval ga, gb;
  };
  const Dyadic end = pi(wp).hi();
  constexpr int kInitialCells = 64;
  std::vector<Cell> cells;
  Interval prev = g(Interval(0));
  for (int j = 1; j <= kInitialCells; ++j) {
    Dyadic a = cells.empty() ? Dyadic(0) : cells.back().b;
    Dyadic b = j == kInitialCells ? end : Dyadic::div_floor(end * Dyadic(j), Dyadic(kInitialCells), wp);
    Interval gb = g(Interval(b));
    cells.push_back({a, b, prev, gb});
    prev = gb;
  }
  constexpr int kMaxRounds = 200;
  for (int round = 0; round < kMaxRounds; ++round) {
    Dyadic upper = cells.front().ga.hi();
    std::vector<Dyadic> lower(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell& c = cells[i];
      upper = min(upper, min(c.ga.hi(), c.gb.hi()));
      Dyadic ends = min(c.ga.lo(), c.gb.lo());
      Interval span(c.a, c.b);
      // |cos| is concave wherever cos keeps its sign, so on a sign-stable
      // cell the minimum sits at an endpoint. Otherwise use the modulus 2.
      bool stable = !cos(span, wp).contains_zero() && !cos(span + gamma, wp).contains_zero();
      lower[i] = stable ? ends : ends - (c.b - c.a);
    }
    Dyadic least = *std::min_element(lower.begin(), lower.end());
    if (upper - least <= tol) return Interval(least, upper);
    std::vector<Cell> next;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (lower[i] > upper) continue;
      const Cell& c = cells[i];
      Dyadic m = (c.a + c.b).ldexp(-1);
      Interval gm = g(Interval(m));
      next.push_back({c.a, m, c.ga, gm});
      next.push_back({m, c.b, gm, c.gb});
    }
    cells = std::move(next);
  }
  throw ResourceError("pair_cosine_minimum did not converge");
}

Interval length_upper_bound(const VariationOracle& oracle) {
  const Dyadic probe = Dyadic::pow2(-10);
  Direction h = Direction::horizontal(), v = Direction::vertical();
  VariationWitness wh = oracle.achieve_variation(h, probe);
  VariationWitness wv = oracle.achieve_variation(v, probe);
  Interval bars(wh.variation.hi() + wh.defect + wv.variation.hi() + wv.defect);
  Interval r = two_direction_length_bound(v.theta() - h.theta());
  return (r * bars).round(Precision(64));
}

Interval integrate_profile(const std::vector<Point>& chords, long cells, Precision p) {
  if (cells < 1) throw InvalidInput("integrate_profile needs at least one cell");
  Precision wp = p + (count_bits(static_cast<std::size_t>(cells)) + 8);
  Interval length = polyline_length(chords, wp);
  Interval h = divide(pi(wp + 4), Interval(cells), wp + 4);
  Interval sum;
  for (long j = 0; j < cells; ++j) {
    Interval theta = (h * Interval(Dyadic(2 * j + 1, -1))).round(wp + 4);
    sum += directional_variation(chords, Direction::from_angle(theta, wp), wp);
  }
  Interval estimate = (sum * h).round(wp);
  // Midpoint remainder: |f''| <= l_P on kink-free cells gives pi l_P h^2 / 24
  // overall; each chord kinks in at most two cells, adding l_i h^2 / 4 each.
  Interval coeff = divide(pi(wp), Interval(24), wp) + Interval(Dyadic(1, -1));
  Dyadic err = (Interval(length.hi()) * square(Interval(h.hi())) * Interval(coeff.hi())).round(wp).hi();
  return Interval(estimate.lo() - err, estimate.hi() + err).round(p + 2);
}

}  // namespace crofton
