#pragma once

#include <optional>
#include <vector>

#include "crofton/path.hpp"

namespace crofton {

// One segment of the inscribed polygon: delta = alpha(x_{i+1}) - alpha(x_i),
// its Euclidean length and its argument. Zero chords carry no angle.
struct ChordStats {
  IntervalPoint delta;
  Interval length;
  std::optional<Interval> angle;

  bool degenerate() const { return !angle.has_value(); }
};

// Exact chord vectors alpha(x_{i+1}) - alpha(x_i), one per cell of P.
std::vector<Point> chord_vectors(const PathSpec& path, const Partition& partition);

// Length of an exact vector, width <= 2^-bits.
Interval chord_length(const Point& delta, Precision p);

std::vector<ChordStats> chord_stats(const PathSpec& path, const Partition& partition,
                                    Precision p = Precision(64));

// l_P(alpha), the length of the inscribed polygon, with width <= 2^-bits.
Interval polyline_length(const PathSpec& path, const Partition& partition,
                         Precision p = Precision(64));
Interval polyline_length(const std::vector<Point>& chords, Precision p);

}  // namespace crofton
