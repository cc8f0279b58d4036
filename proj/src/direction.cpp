#include "crofton/direction.hpp"

#include "crofton/elementary.hpp"

namespace crofton {
namespace {

// Integer nearest to x / pi (ties toward +inf); exactness is irrelevant,
// callers subtract k*pi with a rigorous enclosure of pi.
mpz_class nearest_multiple_of_pi(const Dyadic& x, bool floor_only) {
  Dyadic q = Dyadic::div_floor(x, pi(Precision(64)).mid(), Precision(4));
  if (!floor_only) q += Dyadic(1, -1);
  Dyadic f = q.floor_to(Precision(0));
  mpz_class r = f.mantissa();
  if (f.exponent() > 0) mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(f.exponent()));
  return r;
}

Interval shift_by_pi(const Interval& theta, const mpz_class& k, Precision p) {
  if (k == 0) return theta;
  auto kbits = static_cast<int>(mpz_sizeinbase(k.get_mpz_t(), 2));
  return theta - Interval(Dyadic(k, 0)) * pi(p + (kbits + 2));
}

}  // namespace

Direction Direction::from_angle(const Interval& theta, Precision p) {
  Precision wp = p + 4;
  Interval wx = cos(theta, wp), wy = sin(theta, wp);
  Interval canonical = shift_by_pi(theta, nearest_multiple_of_pi(theta.mid(), true), wp);
  return Direction(wx, wy, canonical, std::nullopt);
}

Direction Direction::from_stereographic(const mpq_class& u, Precision p) {
  mpq_class den = 1 + u * u;
  Point w{(1 - u * u) / den, 2 * u / den};
  Precision wp = p + 4;
  Interval wx = Interval::of(w.x, wp), wy = Interval::of(w.y, wp);
  Interval uu(Dyadic::floor_of(u, wp + 8), Dyadic::ceil_of(u, wp + 8));
  Interval theta = atan(uu, wp).ldexp(1);
  if (theta.mid().sign() < 0) theta = theta + pi(wp + 4);
  return Direction(wx, wy, theta, w);
}

mpq_class stereographic_parameter(const Interval& theta, Precision p) {
  Precision wp = p + 8;
  Interval phi = shift_by_pi(theta, nearest_multiple_of_pi(theta.mid(), false), wp);
  Interval half = phi.ldexp(-1);
  Interval t = divide(sin(half, wp), cos(half, wp), wp);
  // Round to nearest on the 2^-bits grid, then clamp to [-1, 1].
  Dyadic u = (t.mid() + Dyadic::pow2(-p.bits - 1)).floor_to(p);
  u = max(Dyadic(-1), min(Dyadic(1), u));
  return u.to_rational();
}

}  // namespace crofton
