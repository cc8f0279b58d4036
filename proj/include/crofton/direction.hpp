#pragma once

#include <optional>

#include <gmpxx.h>

#include "crofton/interval.hpp"
#include "crofton/path.hpp"

namespace crofton {

// Normalization tolerance for interval unit vectors: |w| lies in
// [1 - 2^-40, 1 + 2^-40].
inline constexpr int kDirectionNormBits = 40;

// A direction in the plane, identified modulo pi. Carries an enclosure of the
// unit vector w, an enclosure of its canonical angle, and, when available, an
// exact rational unit vector.
class Direction {
 public:
  // w = (cos theta, sin theta). The canonical angle is theta reduced so that
  // its midpoint lies in [0, pi).
  static Direction from_angle(const Interval& theta, Precision p = Precision(96));
  // Rational point on the unit circle ((1-u^2)/(1+u^2), 2u/(1+u^2)), the
  // direction of angle 2 atan(u).
  static Direction from_stereographic(const mpq_class& u, Precision p = Precision(96));
  static Direction horizontal() { return from_stereographic(0); }
  static Direction vertical() { return from_stereographic(1); }

  const Interval& wx() const { return wx_; }
  const Interval& wy() const { return wy_; }
  const Interval& theta() const { return theta_; }
  const std::optional<Point>& exact() const { return exact_; }

 private:
  Direction(Interval wx, Interval wy, Interval theta, std::optional<Point> exact)
      : wx_(std::move(wx)), wy_(std::move(wy)), theta_(std::move(theta)), exact_(std::move(exact)) {}

  Interval wx_;
  Interval wy_;
  Interval theta_;
  std::optional<Point> exact_;
};

// Rational stereographic parameter u, on the 2^-bits grid, of a direction
// whose angle is within roughly 2^-(bits-2) of theta. |u| <= 1.
mpq_class stereographic_parameter(const Interval& theta, Precision p);

}  // namespace crofton
