#include "crofton/dyadic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "crofton/errors.hpp"

namespace crofton {
namespace {

// floor(m * 2^s) for any sign of s.
mpz_class shift_floor(const mpz_class& m, std::int64_t s) {
  mpz_class r;
  if (s >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  }
  return r;
}

mpz_class shift_ceil(const mpz_class& m, std::int64_t s) {
  mpz_class r;
  if (s >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  }
  return r;
}

// Integer sqrt rounded up.
mpz_class isqrt_ceil(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) r += 1;
  return r;
}

std::string format_fixed(const mpz_class& scaled, int digits) {
  mpz_class a = abs(scaled);
  std::string s = a.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(s.size())), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(scaled) < 0) s.insert(0, "-");
  return s;
}

mpz_class pow10(int digits) {
  mpz_class t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return t;
}

}  // namespace

Dyadic::Dyadic(long v) : mant_(v), exp_(0) { normalize(); }

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent)
    : mant_(std::move(mantissa)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  auto tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
    exp_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::pow2(std::int64_t e) { return Dyadic(mpz_class(1), e); }

Dyadic Dyadic::floor_of(const mpq_class& q, Precision p) {
  mpz_class num = shift_floor(q.get_num(), p.bits);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  return Dyadic(r, -p.bits);
}

Dyadic Dyadic::ceil_of(const mpq_class& q, Precision p) {
  mpz_class num = shift_ceil(q.get_num(), p.bits);
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  return Dyadic(r, -p.bits);
}

Dyadic Dyadic::lower_bound_of(const mpq_class& q, int significant_bits) {
  if (q == 0) return Dyadic();
  // 2^(nb - db - 1) <= |q| < 2^(nb - db + 1)
  auto nb = static_cast<std::int64_t>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  auto db = static_cast<std::int64_t>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  std::int64_t lead = nb - db - 1;
  return floor_of(q, Precision(static_cast<int>(significant_bits - lead)));
}

Dyadic Dyadic::from_double(double d) {
  if (!std::isfinite(d)) throw DomainError("non-finite double");
  int e = 0;
  double frac = std::frexp(d, &e);
  auto m = static_cast<long long>(std::ldexp(frac, 53));
  mpz_class mz;
  mpz_set_si(mz.get_mpz_t(), static_cast<long>(m));
  return Dyadic(mz, e - 53);
}

std::int64_t Dyadic::msb() const {
  if (is_zero()) return std::numeric_limits<std::int64_t>::min();
  return static_cast<std::int64_t>(mpz_sizeinbase(mant_.get_mpz_t(), 2)) - 1 + exp_;
}

Dyadic Dyadic::floor_to(Precision p) const {
  if (exp_ >= -p.bits) return *this;
  return Dyadic(shift_floor(mant_, exp_ + p.bits), -p.bits);
}

Dyadic Dyadic::ceil_to(Precision p) const {
  if (exp_ >= -p.bits) return *this;
  return Dyadic(shift_ceil(mant_, exp_ + p.bits), -p.bits);
}

Dyadic Dyadic::abs() const {
  Dyadic r = *this;
  mpz_abs(r.mant_.get_mpz_t(), r.mant_.get_mpz_t());
  return r;
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  mpz_neg(r.mant_.get_mpz_t(), r.mant_.get_mpz_t());
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (exp_ == o.exp_) {
    mant_ += o.mant_;
  } else if (exp_ < o.exp_) {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), o.mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(o.exp_ - exp_));
    mant_ += t;
  } else {
    mpz_mul_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_ - o.exp_));
    mant_ += o.mant_;
    exp_ = o.exp_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) { return *this += -o; }

Dyadic& Dyadic::operator*=(const Dyadic& o) {
  mant_ *= o.mant_;
  exp_ += o.exp_;
  if (mant_ == 0) exp_ = 0;
  return *this;
}

Dyadic Dyadic::ldexp(std::int64_t k) const {
  if (is_zero()) return *this;
  Dyadic r = *this;
  r.exp_ += k;
  return r;
}

Dyadic Dyadic::div_floor(const Dyadic& a, const Dyadic& b, Precision p) {
  if (b.is_zero()) throw DomainError("division by zero");
  std::int64_t s = a.exp_ - b.exp_ + p.bits;
  mpz_class num = a.mant_, den = b.mant_, q;
  if (s >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  }
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(q, -p.bits);
}

Dyadic Dyadic::div_ceil(const Dyadic& a, const Dyadic& b, Precision p) {
  if (b.is_zero()) throw DomainError("division by zero");
  std::int64_t s = a.exp_ - b.exp_ + p.bits;
  mpz_class num = a.mant_, den = b.mant_, q;
  if (s >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
  }
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(q, -p.bits);
}

Dyadic Dyadic::sqrt_floor(const Dyadic& x, Precision p) {
  if (x.sign() < 0) throw DomainError("sqrt of negative value");
  mpz_class n = shift_floor(x.mant_, x.exp_ + 2LL * p.bits), r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return Dyadic(r, -p.bits);
}

Dyadic Dyadic::sqrt_ceil(const Dyadic& x, Precision p) {
  if (x.sign() < 0) throw DomainError("sqrt of negative value");
  return Dyadic(isqrt_ceil(shift_ceil(x.mant_, x.exp_ + 2LL * p.bits)), -p.bits);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same sign: compare magnitudes cheaply by leading bit first.
  std::int64_t ma = a.msb(), mb = b.msb();
  if (ma != mb) return sa > 0 ? (ma <=> mb) : (mb <=> ma);
  std::int64_t e = std::min(a.exp_, b.exp_);
  mpz_class x = shift_floor(a.mant_, a.exp_ - e);
  mpz_class y = shift_floor(b.mant_, b.exp_ - e);
  int c = cmp(x, y);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

mpq_class Dyadic::to_rational() const {
  mpq_class q;
  if (exp_ >= 0) {
    mpz_class n;
    mpz_mul_2exp(n.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
    q = mpq_class(n);
  } else {
    mpz_class d;
    mpz_setbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp_));
    q = mpq_class(mant_, d);
    q.canonicalize();
  }
  return q;
}

double Dyadic::to_double() const {
  long e = 0;
  double m = mpz_get_d_2exp(&e, mant_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e + exp_));
}

std::string Dyadic::to_decimal_floor(int digits) const {
  mpz_class scaled = mant_ * pow10(digits);
  return format_fixed(shift_floor(scaled, exp_), digits);
}

std::string Dyadic::to_decimal_ceil(int digits) const {
  mpz_class scaled = mant_ * pow10(digits);
  return format_fixed(shift_ceil(scaled, exp_), digits);
}

std::string Dyadic::debug_string() const {
  std::ostringstream os;
  os << mant_.get_str() << "*2^" << exp_;
  return os.str();
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

Precision precision_for(const Dyadic& tol) {
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  return Precision(static_cast<int>(-tol.msb()));
}

}  // namespace crofton
