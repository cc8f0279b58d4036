#pragma once

#include <iosfwd>

#include "crofton/dyadic.hpp"

namespace crofton {

// Closed interval with dyadic endpoints, lo <= hi. Addition, subtraction and
// multiplication are exact; operations that need rounding take a Precision
// and round outward, so the result always encloses the exact real result.
class Interval {
 public:
  Interval() = default;
  Interval(Dyadic point);  // NOLINT(google-explicit-constructor)
  Interval(long v) : Interval(Dyadic(v)) {}  // NOLINT
  Interval(int v) : Interval(Dyadic(v)) {}   // NOLINT
  Interval(Dyadic lo, Dyadic hi);

  // Tightest enclosure of q on the 2^-bits grid.
  static Interval of(const mpq_class& q, Precision p);
  static Interval hull(const Interval& a, const Interval& b);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Dyadic width() const { return hi_ - lo_; }
  Dyadic mid() const { return (lo_ + hi_).ldexp(-1); }
  // Upper bound of |x| over the interval.
  Dyadic mag() const { return max(lo_.abs(), hi_.abs()); }
  // Lower bound of |x| over the interval.
  Dyadic mig() const;

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const mpq_class& q) const;
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  // Certainly-true comparisons.
  bool certainly_less(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_greater(const Interval& o) const { return lo_ > o.hi_; }

  // Outward rounding of both endpoints onto the 2^-bits grid.
  Interval round(Precision p) const;

  Interval operator-() const { return {-hi_, -lo_}; }
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  Interval ldexp(std::int64_t k) const { return {lo_.ldexp(k), hi_.ldexp(k)}; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

Interval abs(const Interval& a);
Interval square(const Interval& a);
// Throws DomainError when hi < 0; a straddling zero is clipped to [0, hi].
Interval sqrt(const Interval& a, Precision p);
// sqrt of an exact nonnegative rational, width <= 2^-(bits-1).
Interval sqrt_of(const mpq_class& q, Precision p);
// Throws DomainError when the divisor contains zero.
Interval divide(const Interval& a, const Interval& b, Precision p);
Interval intersect(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace crofton
