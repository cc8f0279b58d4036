#include "crofton/chords.hpp"

#include <bit>

#include "crofton/elementary.hpp"

namespace crofton {

std::vector<Point> chord_vectors(const PathSpec& path, const Partition& partition) {
  const auto& params = partition.params();
  std::vector<Point> out;
  out.reserve(partition.cells());
  Point prev = path.exact_point(params.front());
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (params[i] == params[i - 1]) {
      out.push_back({0, 0});
      continue;
    }
    Point cur = path.exact_point(params[i]);
    out.push_back({cur.x - prev.x, cur.y - prev.y});
    prev = std::move(cur);
  }
  return out;
}

Interval chord_length(const Point& delta, Precision p) {
  return sqrt_of(delta.x * delta.x + delta.y * delta.y, p + 1);
}

std::vector<ChordStats> chord_stats(const PathSpec& path, const Partition& partition, Precision p) {
  std::vector<ChordStats> out;
  for (const Point& d : chord_vectors(path, partition)) {
    ChordStats s{{Interval::of(d.x, p), Interval::of(d.y, p)}, chord_length(d, p), std::nullopt};
    if (d.x != 0 || d.y != 0) {
      s.angle = atan2(Interval::of(d.y, p + 8), Interval::of(d.x, p + 8), p);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Interval polyline_length(const std::vector<Point>& chords, Precision p) {
  Precision wp = p + (static_cast<int>(std::bit_width(chords.size())) + 3);
  Interval total;
  for (const Point& d : chords) total += chord_length(d, wp);
  return total.round(p + 2);
}

Interval polyline_length(const PathSpec& path, const Partition& partition, Precision p) {
  return polyline_length(chord_vectors(path, partition), p);
}

}  // namespace crofton
