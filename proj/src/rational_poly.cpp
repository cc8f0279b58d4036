#include "crofton/rational_poly.hpp"

#include <algorithm>
#include <bit>

#include "crofton/errors.hpp"

namespace crofton {

RationalPoly::RationalPoly(std::vector<mpq_class> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPoly::operator()(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Interval RationalPoly::evaluate(const Interval& t, Precision p) const {
  Interval acc;
  Precision wp = p + 8;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = (acc * t + Interval::of(*it, wp)).round(wp);
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const mpq_class& s, const RationalPoly& a) {
  RationalPoly r = a;
  for (auto& c : r.coeffs_) c *= s;
  r.trim();
  return r;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<mpq_class> rem = coeffs_;
  if (degree() < d.degree()) return {RationalPoly(), *this};
  std::vector<mpq_class> quot(static_cast<std::size_t>(degree() - d.degree() + 1));
  for (int k = degree() - d.degree(); k >= 0; --k) {
    mpq_class f = rem[static_cast<std::size_t>(k + d.degree())] / d.leading();
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= d.degree(); ++j) {
      rem[static_cast<std::size_t>(k + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(d.degree()));
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return *this;
  return mpq_class(1) / leading() * *this;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPoly square_free_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p;
  RationalPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

SturmChain::SturmChain(const RationalPoly& square_free) {
  chain_.push_back(square_free);
  if (square_free.degree() <= 0) return;
  chain_.push_back(square_free.derivative());
  while (chain_.back().degree() > 0) {
    RationalPoly r = -chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    mpq_class lead = abs(r.leading());
    chain_.push_back(mpq_class(1) / lead * r);
  }
}

int SturmChain::variations(const mpq_class& t) const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

struct Isolator {
  const SturmChain& chain;
  std::vector<RootInterval>& out;

  bool is_root(const Dyadic& t) const { return chain.base().sign_at(t.to_rational()) == 0; }
  int count(const Dyadic& a, const Dyadic& b) const {
    return chain.count(a.to_rational(), b.to_rational());
  }

  // Roots in the half-open interval (a, b].
  void run(const Dyadic& a, const Dyadic& b) {
    int n = count(a, b);
    if (n == 0) return;
    if (n > 1) {
      Dyadic m = (a + b).ldexp(-1);
      run(a, m);
      run(m, b);
      return;
    }
    if (is_root(b)) {
      out.push_back({b, b});
      return;
    }
    // One root strictly inside (a, b): shrink until neither endpoint is
    // shared with a neighbouring cell.
    Dyadic c = a, d = b;
    while (c == a || d == b) {
      Dyadic m = (c + d).ldexp(-1);
      if (is_root(m)) {
        out.push_back({m, m});
        return;
      }
      if (count(c, m) == 1) {
        d = m;
      } else {
        c = m;
      }
    }
    out.push_back({c, d});
  }
};

}  // namespace

std::vector<RootInterval> sturm_isolate(const RationalPoly& p, const Dyadic& lo, const Dyadic& hi) {
  if (p.is_zero()) throw InvalidInput("zero polynomial has infinitely many roots");
  if (hi < lo) throw InvalidInput("empty root-isolation domain");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  SturmChain chain(square_free_part(p));
  Isolator iso{chain, out};
  if (iso.is_root(lo)) out.push_back({lo, lo});
  if (lo < hi) iso.run(lo, hi);
  return out;
}

RootInterval refine_root(const RationalPoly& p, const RootInterval& iso, const Dyadic& eps) {
  int slo = p.sign_at(iso.lo.to_rational());
  if (slo == 0) return {iso.lo, iso.lo};
  int shi = p.sign_at(iso.hi.to_rational());
  if (shi == 0) return {iso.hi, iso.hi};
  if (slo == shi) throw DomainError("refine_root: no sign change across the isolating interval");
  Dyadic lo = iso.lo, hi = iso.hi;
  while (hi - lo > eps) {
    Dyadic m = (lo + hi).ldexp(-1);
    int s = p.sign_at(m.to_rational());
    if (s == 0) return {m, m};
    if (s == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return {lo, hi};
}

Interval integrate_speed_upper(const RationalPoly& dx, const RationalPoly& dy, long cells,
                               Precision p) {
  if (cells < 1) throw InvalidInput("integrate_speed_upper needs at least one cell");
  auto n = static_cast<unsigned long>(cells);
  Precision wp = p + (static_cast<int>(std::bit_width(n)) + 8);
  Interval total;
  for (long i = 0; i < cells; ++i) {
    mpq_class a{mpz_class{i}, mpz_class{cells}}, b{mpz_class{i + 1}, mpz_class{cells}};
    Interval cell(Dyadic::floor_of(a, wp), Dyadic::ceil_of(b, wp));
    Interval sx = dx.evaluate(cell, wp), sy = dy.evaluate(cell, wp);
    total += sqrt(square(sx) + square(sy), wp);
  }
  return divide(total, Interval(static_cast<long>(cells)), wp).round(p + 2);
}

}  // namespace crofton
