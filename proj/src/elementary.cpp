#include "crofton/elementary.hpp"

#include "crofton/errors.hpp"

namespace crofton {
namespace {

constexpr int kGuardBits = 16;
constexpr int kPiBits = 1024;

mpz_class floor_integer(const Dyadic& d) {
  Dyadic f = d.floor_to(Precision(0));
  mpz_class r = f.mantissa();
  if (f.exponent() > 0) {
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(f.exponent()));
  }
  return r;
}

Interval plus_minus(const Interval& x, const Dyadic& r) { return {x.lo() - r, x.hi() + r}; }

// Sum_{k>=0} (-1)^k y^(2k+1)/(2k+1) for |y| <= 1/4, with the alternating
// tail bounded by the first omitted term.
Interval atan_series(const Interval& y, Precision wp) {
  Interval y2 = square(y).round(wp + 8);
  Interval power = y;
  Interval sum;
  const Dyadic eps = Dyadic::pow2(-(wp.bits + 2));
  for (long k = 0;; ++k) {
    Interval term = divide(power, Interval(2 * k + 1), wp + 8);
    if (term.mag() < eps) return plus_minus(sum, term.mag()).round(wp + 4);
    sum = (k % 2 == 0) ? sum + term : sum - term;
    power = (power * y2).round(wp + 8);
  }
}

Interval compute_pi(Precision wp) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
  Interval a = atan_series(divide(Interval(1), Interval(5), wp + 8), wp + 4);
  Interval b = atan_series(divide(Interval(1), Interval(239), wp + 8), wp + 4);
  return a.ldexp(4) - b.ldexp(2);
}

const Interval& pi_cached() {
  static const Interval value = compute_pi(Precision(kPiBits + kGuardBits)).round(Precision(kPiBits + 4));
  return value;
}

// Taylor series of sin (odd = true) or cos about 0, valid for |r| <= 1.
Interval taylor(const Interval& r, bool odd, Precision wp) {
  Interval r2 = square(r).round(wp + 8);
  Interval term = odd ? r : Interval(1);
  Interval sum;
  const Dyadic eps = Dyadic::pow2(-(wp.bits + 2));
  long n = odd ? 1 : 0;  // current term is r^n / n!
  for (long k = 0;; ++k) {
    if (term.mag() < eps) return plus_minus(sum, term.mag()).round(wp + 4);
    sum = (k % 2 == 0) ? sum + term : sum - term;
    term = divide(term * r2, Interval((n + 1) * (n + 2)), wp + 8);
    n += 2;
  }
}

// sin and cos of a point, with width <= 2^-(wp-2).
std::pair<Interval, Interval> sin_cos_point(const Dyadic& m, Precision wp) {
  const Interval& pi_big = pi_cached();
  // Quadrant choice needs only a rough quotient; soundness comes from r.
  Dyadic z = Dyadic::div_floor(m.ldexp(1), pi_big.mid(), Precision(4));
  mpz_class q = floor_integer(z + Dyadic(1, -1));
  auto qbits = static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2));
  Precision pp = wp + (qbits + 4);
  if (pp.bits > kPiBits) throw DomainError("argument too large for trig enclosure");
  Interval half_pi = pi(pp).ldexp(-1);
  Interval r = Interval(m) - Interval(Dyadic(q, 0)) * half_pi;
  Interval s = taylor(r, true, wp);
  Interval c = taylor(r, false, wp);
  mpz_class qm;
  mpz_fdiv_r_ui(qm.get_mpz_t(), q.get_mpz_t(), 4);
  switch (qm.get_si()) {
    case 0: return {s, c};
    case 1: return {c, -s};
    case 2: return {-s, -c};
    default: return {-c, s};
  }
}

Interval atan_point(const Dyadic& x, Precision wp) {
  if (x.is_zero()) return Interval();
  if (x.abs() > Dyadic(1)) {
    Interval inv = divide(Interval(1), Interval(x), wp + 4);
    Interval half_pi = pi(wp + 4).ldexp(-1);
    Interval inner = atan_point(inv.mid(), wp);
    inner = plus_minus(inner, inv.width());  // atan is 1-Lipschitz
    return x.sign() > 0 ? half_pi - inner : -half_pi - inner;
  }
  // Two half-angle reductions: |y| <= tan(pi/16) < 1/4.
  Interval y(x);
  for (int i = 0; i < 2; ++i) {
    Interval s = sqrt(Interval(1) + square(y), wp + 8);
    y = divide(y, Interval(1) + s, wp + 8);
  }
  return atan_series(y, wp + 4).ldexp(2);
}

}  // namespace

Interval pi(Precision p) {
  if (p.bits > kPiBits) throw DomainError("pi requested beyond supported precision");
  return pi_cached().round(p);
}

Interval trig_enclosure(const Interval& x, Trig which, Precision p) {
  Precision wp = p + kGuardBits;
  auto [s, c] = sin_cos_point(x.mid(), wp);
  Interval v = which == Trig::kSin ? s : c;
  Dyadic rad = x.width().ldexp(-1);
  v = plus_minus(v, rad).round(p + 2);
  return intersect(v, Interval(-1, 1));
}

Interval atan(const Interval& x, Precision p) {
  Precision wp = p + kGuardBits;
  Interval lo = atan_point(x.lo(), wp);
  if (x.is_point()) return lo.round(p + 2);
  Interval hi = atan_point(x.hi(), wp);
  return Interval(lo.lo(), hi.hi()).round(p + 2);
}

Interval atan2(const Interval& y, const Interval& x, Precision p) {
  Precision wp = p + 8;
  if (!x.contains_zero()) {
    Interval base = atan(divide(y, x, wp), wp);
    if (x.lo().sign() > 0) return base.round(p);
    Interval pie = pi(wp);
    return (y.lo().sign() >= 0 ? base + pie : base - pie).round(p);
  }
  if (!y.contains_zero()) {
    Interval base = atan(divide(x, y, wp), wp);
    Interval half_pi = pi(wp).ldexp(-1);
    return (y.lo().sign() > 0 ? half_pi - base : -half_pi - base).round(p);
  }
  throw DomainError("atan2 of a vector that may be zero");
}

}  // namespace crofton
