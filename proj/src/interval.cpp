#include "crofton/interval.hpp"

#include <ostream>

#include "crofton/errors.hpp"

namespace crofton {

Interval::Interval(Dyadic point) : lo_(point), hi_(std::move(point)) {}

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi");
}

Interval Interval::of(const mpq_class& q, Precision p) {
  return {Dyadic::floor_of(q, p), Dyadic::ceil_of(q, p)};
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return {min(a.lo_, b.lo_), max(a.hi_, b.hi_)};
}

Dyadic Interval::mig() const {
  if (contains_zero()) return Dyadic();
  return min(lo_.abs(), hi_.abs());
}

bool Interval::contains(const mpq_class& q) const {
  return lo_.to_rational() <= q && q <= hi_.to_rational();
}

Interval Interval::round(Precision p) const { return {lo_.floor_to(p), hi_.ceil_to(p)}; }

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  lo_ -= o.hi_;
  hi_ -= o.lo_;
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (lo_.sign() >= 0 && o.lo_.sign() >= 0) {
    lo_ *= o.lo_;
    hi_ *= o.hi_;
    return *this;
  }
  Dyadic a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = min(min(a, b), min(c, d));
  hi_ = max(max(a, b), max(c, d));
  return *this;
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  return {Dyadic(), a.mag()};
}

Interval square(const Interval& a) {
  Interval m = abs(a);
  return {m.lo() * m.lo(), m.hi() * m.hi()};
}

Interval sqrt(const Interval& a, Precision p) {
  if (a.hi().sign() < 0) throw DomainError("sqrt of an interval with hi < 0");
  Dyadic lo = a.lo().sign() > 0 ? Dyadic::sqrt_floor(a.lo(), p) : Dyadic();
  return {lo, Dyadic::sqrt_ceil(a.hi(), p)};
}

Interval sqrt_of(const mpq_class& q, Precision p) {
  if (q < 0) throw DomainError("sqrt of a negative rational");
  // floor(sqrt(floor(X))) == floor(sqrt(X)) for X = q * 4^bits.
  mpz_class num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * p.bits));
  mpz_class fl, cl, lo, hi;
  mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  mpz_cdiv_q(cl.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  mpz_sqrt(lo.get_mpz_t(), fl.get_mpz_t());
  mpz_sqrt(hi.get_mpz_t(), cl.get_mpz_t());
  if (hi * hi != cl) hi += 1;
  return {Dyadic(lo, -p.bits), Dyadic(hi, -p.bits)};
}

Interval divide(const Interval& a, const Interval& b, Precision p) {
  if (b.contains_zero()) throw DomainError("division by an interval containing zero");
  // Candidate quotients at the four corners; outward rounding on each.
  Dyadic lo, hi;
  bool first = true;
  for (const Dyadic* x : {&a.lo(), &a.hi()}) {
    for (const Dyadic* y : {&b.lo(), &b.hi()}) {
      Dyadic ql = Dyadic::div_floor(*x, *y, p);
      Dyadic qh = Dyadic::div_ceil(*x, *y, p);
      if (first) {
        lo = ql;
        hi = qh;
        first = false;
      } else {
        lo = min(lo, ql);
        hi = max(hi, qh);
      }
    }
  }
  return {lo, hi};
}

Interval intersect(const Interval& a, const Interval& b) {
  return {max(a.lo(), b.lo()), min(a.hi(), b.hi())};
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << "[" << x.lo().to_decimal_floor(17) << ", " << x.hi().to_decimal_ceil(17) << "]";
}

}  // namespace crofton
