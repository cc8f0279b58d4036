#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace crofton {

// Absolute precision 2^-bits. Every rounded operation in the library takes
// one of these.
struct Precision {
  int bits = 64;

  constexpr Precision() = default;
  constexpr explicit Precision(int b) : bits(b) {}

  Precision operator+(int extra) const { return Precision(bits + extra); }
  friend bool operator==(Precision, Precision) = default;
};

// Exact binary rational mantissa * 2^exponent. Canonical: the mantissa is
// odd, or the value is zero with exponent 0. Sign lives in the mantissa.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v);  // NOLINT(google-explicit-constructor)
  Dyadic(int v) : Dyadic(static_cast<long>(v)) {}  // NOLINT
  Dyadic(mpz_class mantissa, std::int64_t exponent);

  static Dyadic pow2(std::int64_t e);
  // Largest multiple of 2^-bits not above q, and smallest not below.
  static Dyadic floor_of(const mpq_class& q, Precision p);
  static Dyadic ceil_of(const mpq_class& q, Precision p);
  // Relative rounding: about `bits` significant bits, downward.
  static Dyadic lower_bound_of(const mpq_class& q, int significant_bits);
  // Exact conversion of a finite double.
  static Dyadic from_double(double d);

  const mpz_class& mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }
  int sign() const { return sgn(mant_); }
  bool is_zero() const { return sign() == 0; }

  // Position of the leading bit: 2^(msb) <= |x| < 2^(msb+1). Zero -> INT64_MIN.
  std::int64_t msb() const;

  Dyadic floor_to(Precision p) const;
  Dyadic ceil_to(Precision p) const;
  Dyadic abs() const;
  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Dyadic& o);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }
  // Multiplication by 2^k, exact.
  Dyadic ldexp(std::int64_t k) const;

  // a / b rounded to a multiple of 2^-bits.
  static Dyadic div_floor(const Dyadic& a, const Dyadic& b, Precision p);
  static Dyadic div_ceil(const Dyadic& a, const Dyadic& b, Precision p);
  // sqrt(x) rounded to a multiple of 2^-bits; x >= 0.
  static Dyadic sqrt_floor(const Dyadic& x, Precision p);
  static Dyadic sqrt_ceil(const Dyadic& x, Precision p);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.mant_ == b.mant_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  mpq_class to_rational() const;
  double to_double() const;
  // floor/ceil of value * 10^digits, formatted as a fixed-point decimal.
  std::string to_decimal_floor(int digits) const;
  std::string to_decimal_ceil(int digits) const;
  // Exact "m*2^e" form for diagnostics.
  std::string debug_string() const;

 private:
  void normalize();

  mpz_class mant_ = 0;
  std::int64_t exp_ = 0;
};

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

// Smallest p with 2^-p <= tol (tol > 0); the precision needed to resolve tol.
Precision precision_for(const Dyadic& tol);

}  // namespace crofton
