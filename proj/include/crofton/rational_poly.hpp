#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "crofton/interval.hpp"

namespace crofton {

// Univariate polynomial with exact rational coefficients in ascending order.
// The zero polynomial has no coefficients; otherwise the leading coefficient
// is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> ascending);

  static RationalPoly constant(const mpq_class& c) { return RationalPoly({c}); }
  // The monomial t.
  static RationalPoly identity() { return RationalPoly({0, 1}); }

  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& t) const;
  int sign_at(const mpq_class& t) const { return sgn((*this)(t)); }
  // Interval Horner evaluation with coefficients enclosed on the 2^-bits grid.
  Interval evaluate(const Interval& t, Precision p) const;

  RationalPoly derivative() const;
  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const mpq_class& c, const RationalPoly& a);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  // Euclidean division: *this = q * d + r, deg r < deg d.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;
  RationalPoly monic() const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

// Monic greatest common divisor.
RationalPoly gcd(RationalPoly a, RationalPoly b);
// p / gcd(p, p'): same distinct roots, all simple.
RationalPoly square_free_part(const RationalPoly& p);

// Isolating interval for one real root. Endpoints are dyadic; lo == hi means
// the root is exactly that dyadic.
struct RootInterval {
  Dyadic lo;
  Dyadic hi;
  bool exact() const { return lo == hi; }
};

// Sturm sequence of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const RationalPoly& square_free);
  // Sign variations at t (zeros skipped).
  int variations(const mpq_class& t) const;
  // Number of distinct roots in the half-open interval (a, b].
  int count(const mpq_class& a, const mpq_class& b) const {
    return variations(a) - variations(b);
  }
  const RationalPoly& base() const { return chain_.front(); }

 private:
  std::vector<RationalPoly> chain_;
};

// Disjoint isolating intervals, in increasing order, for every distinct real
// root of p in [lo, hi] (endpoints included). Throws InvalidInput on the zero
// polynomial.
std::vector<RootInterval> sturm_isolate(const RationalPoly& p, const Dyadic& lo, const Dyadic& hi);

// Sign-based bisection of an isolating interval down to width <= eps. The
// polynomial must vanish at an endpoint or change sign across the interval.
RootInterval refine_root(const RationalPoly& p, const RootInterval& iso, const Dyadic& eps);

// Enclosure of the integral over [0,1] of sqrt(dx^2 + dy^2), from interval
// evaluation of the speed on `cells` uniform cells.
Interval integrate_speed_upper(const RationalPoly& dx, const RationalPoly& dy, long cells,
                               Precision p = Precision(64));

}  // namespace crofton
