#pragma once

#include "crofton/interval.hpp"

namespace crofton {

// Enclosure of pi with width <= 2^-bits. Supports up to 1000 bits.
Interval pi(Precision p);

enum class Trig { kSin, kCos };

// sin or cos over an interval. Width is at most 2^-bits + width(x)
// (both functions are 1-Lipschitz). Argument reduction by multiples of pi/2,
// then Taylor series with an explicit Lagrange remainder.
Interval trig_enclosure(const Interval& x, Trig which, Precision p);
inline Interval sin(const Interval& x, Precision p) { return trig_enclosure(x, Trig::kSin, p); }
inline Interval cos(const Interval& x, Precision p) { return trig_enclosure(x, Trig::kCos, p); }

// atan over an interval, width <= 2^-bits + width(x).
Interval atan(const Interval& x, Precision p);

// Argument of the vector (x, y) in (-pi, pi]. The vector must be bounded
// away from the origin.
Interval atan2(const Interval& y, const Interval& x, Precision p);

}  // namespace crofton
