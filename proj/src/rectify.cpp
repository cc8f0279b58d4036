#include "crofton/rectify.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <stdexcept>
#include <thread>

#include "crofton/chords.hpp"
#include "crofton/elementary.hpp"
#include "crofton/errors.hpp"
#include "crofton/variation.hpp"

namespace crofton {
namespace {

int bits_of(std::uint64_t n) { return static_cast<int>(std::bit_width(n)); }

std::uint64_t to_u64(const Dyadic& integral) {
  mpz_class z = integral.mantissa();
  if (integral.exponent() > 0) mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(integral.exponent()));
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 62) throw ResourceError("direction net too large");
  return z.get_ui();
}

Interval reduce_mod_pi(Interval diff, const Interval& pie) {
  Dyadic half = pie.mid().ldexp(-1);
  while (diff.mid() > half) diff -= pie;
  while (diff.mid() < -half) diff += pie;
  return diff;
}

// Narrows an enclosure by raising the working precision until its width is
// within `width`.
template <class F>
Interval enclose(F&& f, const Dyadic& width) {
  Precision p = precision_for(width) + 4;
  for (int i = 0; i < 16; ++i, p = p + 32) {
    Interval v = f(p);
    if (v.width() <= width) return v;
  }
  throw ResourceError("could not tighten enclosure");
}

}  // namespace

Interval refinement_gain_bound(const Interval& L, const Dyadic& eps) {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  if (L.lo().sign() < 0) throw InvalidInput("length bound must be nonnegative");
  Precision p = Precision(2 * precision_for(eps).bits + 64 + static_cast<int>(std::max<std::int64_t>(0, L.hi().msb())));
  // Written as eps^2 / (sqrt(L^2 + eps^2) + L) to avoid cancellation.
  Interval e2 = square(Interval(eps));
  auto at = [&](const Dyadic& l) {
    Interval li(l);
    return divide(e2, sqrt(square(li) + e2, p) + li, p);
  };
  return Interval(at(L.hi()).lo(), at(L.lo()).hi());
}

DirectionNet DirectionNet::build(const Interval& M, const Dyadic& eps) {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  if (M.hi().sign() <= 0) throw InvalidInput("length bound must be positive");
  DirectionNet net;
  Precision p = precision_for(eps) + (16 + static_cast<int>(std::max<std::int64_t>(0, M.hi().msb())));
  net.delta_ = Dyadic::div_floor(eps, M.hi() * Dyadic(6), p);
  Dyadic count = Dyadic::div_ceil(pi(p).hi(), net.delta_, Precision(0));
  net.size_ = to_u64(count.ceil_to(Precision(0)));
  // A u-grid of 2^-q moves the angle 2 atan(u) by at most 2^-q.
  net.snap_precision_ = precision_for(net.delta_) + 5;
  net.budget_ = {eps, M.hi(), Dyadic::div_floor(eps, Dyadic(3), p), net.delta_.ldexp(-3)};
  return net;
}

Interval DirectionNet::angle(std::uint64_t j) const {
  Precision p = snap_precision_ + (16 + bits_of(size_));
  return divide(pi(p) * Interval(Dyadic(mpz_class(static_cast<unsigned long>(j)), 0)),
                Interval(Dyadic(mpz_class(static_cast<unsigned long>(size_)), 0)), p);
}

Direction DirectionNet::node(std::uint64_t j) const {
  if (j >= size_) throw std::out_of_range("net node index");
  if (j == 0) return Direction::horizontal();
  Interval theta = angle(j);
  Direction d = Direction::from_stereographic(stereographic_parameter(theta, snap_precision_),
                                              snap_precision_ + 16);
  Interval diff = reduce_mod_pi(d.theta() - theta, pi(snap_precision_ + 16));
  if (diff.mag() > budget_.snap_bound) throw std::logic_error("net node snapped too far");
  return d;
}

CroftonResult crofton_partition(const VariationOracle& oracle, const Dyadic& eps, unsigned workers) {
  Interval M = length_upper_bound(oracle);
  DirectionNet net = DirectionNet::build(M, eps);
  if (auto exact = oracle.exact_partition()) return {*exact, net, M};
  if (net.size() > kMaxNetNodes) {
    throw ResourceError("direction net has " + std::to_string(net.size()) + " nodes, above the cap of " +
                        std::to_string(kMaxNetNodes));
  }
  const std::uint64_t n = net.size();
  const Dyadic tol = net.budget().node_tolerance;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));

  struct Slot {
    std::vector<Dyadic> params;
    std::uint64_t failed_at = UINT64_MAX;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(workers);
  auto run = [&](unsigned w) {
    Slot& slot = slots[w];
    std::uint64_t begin = n * w / workers, end = n * (w + 1) / workers;
    for (std::uint64_t j = begin; j < end; ++j) {
      try {
        VariationWitness wit = oracle.achieve_variation(net.node(j), tol);
        if (wit.defect > tol) throw OracleError("oracle defect exceeds requested tolerance");
        slot.params.insert(slot.params.end(), wit.partition.params().begin(), wit.partition.params().end());
      } catch (...) {
        slot.failed_at = j;
        slot.error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  std::vector<Dyadic> all;
  for (Slot& slot : slots) {
    if (slot.error) {
      try {
        std::rethrow_exception(slot.error);
      } catch (const std::exception& e) {
        throw OracleError("oracle failed at net node " + std::to_string(slot.failed_at) + " (theta = " +
                          std::to_string(slot.failed_at) + " pi / " + std::to_string(n) + "): " + e.what());
      }
    }
    all.insert(all.end(), slot.params.begin(), slot.params.end());
  }
  return {merge_all(std::move(all)), net, M};
}

Certificate certified_length(const VariationOracle& oracle, const Dyadic& eps, unsigned workers) {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  const Dyadic reserve = eps.ldexp(-4);
  const Dyadic budget = eps - reserve;
  Precision p = precision_for(eps) + 16;
  // Integrating a uniform defect tau over [0, pi] against |cos| yields a
  // length defect of at most pi tau / 2.
  const Dyadic tau = Dyadic::div_floor(budget.ldexp(1), pi(p).hi(), p);
  CroftonResult cr = crofton_partition(oracle, tau, workers);
  std::vector<Point> chords = chord_vectors(oracle.path(), cr.partition);
  Interval l = enclose([&](Precision q) { return polyline_length(chords, q); }, reserve);

  Provenance prov;
  prov.partition = cr.partition;
  prov.net = NetSummary{cr.net.size(), cr.net.delta()};
  prov.tolerance = eps;
  prov.budget = {{"crofton_defect", tau},
                 {"net_delta", cr.net.delta()},
                 {"length_bound", cr.length_bound.hi()},
                 {"node_tolerance", cr.net.budget().node_tolerance},
                 {"snap_bound", cr.net.budget().snap_bound},
                 {"enclosure_reserve", reserve}};
  prov.oracles = {oracle.id()};
  return Certificate::converged(Interval(l.lo(), l.hi() + budget), std::move(prov));
}

Certificate certified_variation(const LengthOracle& oracle, const Direction& d, const Dyadic& eps) {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  const Dyadic reserve = eps.ldexp(-4);
  const Dyadic budget = eps - reserve;
  const Dyadic L = oracle.upper_bound();
  const Dyadic eta = refinement_gain_bound(Interval(L), budget).lo();
  LengthWitness w = oracle.achieve_length(eta);
  std::vector<Point> chords = chord_vectors(oracle.path(), w.partition);
  Interval v = enclose([&](Precision q) { return directional_variation(chords, d, q); }, reserve);

  Provenance prov;
  prov.partition = w.partition;
  prov.tolerance = eps;
  prov.budget = {{"variation_gain", budget},
                 {"gain_threshold", eta},
                 {"length_bound", L},
                 {"length_defect", w.defect},
                 {"enclosure_reserve", reserve}};
  prov.oracles = {oracle.id()};
  return Certificate::converged(Interval(v.lo(), v.hi() + budget), std::move(prov));
}

Certificate direct_variation(const VariationOracle& oracle, const Direction& d, const Dyadic& eps) {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  const Dyadic reserve = eps.ldexp(-4);
  const Dyadic budget = eps - reserve;
  VariationWitness w = oracle.achieve_variation(d, budget);
  Interval v = w.variation;
  if (v.width() > reserve) {
    std::vector<Point> chords = chord_vectors(oracle.path(), w.partition);
    v = enclose([&](Precision q) { return directional_variation(chords, d, q); }, reserve);
  }

  Provenance prov;
  prov.partition = w.partition;
  prov.tolerance = eps;
  prov.budget = {{"oracle_defect", w.defect}, {"enclosure_reserve", reserve}};
  prov.oracles = {oracle.id()};
  return Certificate::converged(Interval(v.lo(), v.hi() + w.defect), std::move(prov));
}

std::string to_string(Verdict v) {
  return v == Verdict::kGreaterThanA ? "greater-than-a" : "less-than-b";
}

Decision variation_order_decide(const LengthOracle& oracle, const Direction& d, const Dyadic& a,
                                const Dyadic& b) {
  if (!(a < b)) throw InvalidInput("decide needs a < b");
  const Dyadic eps = (b - a).ldexp(-1);
  const Dyadic quarter = eps.ldexp(-2);
  // Three quarters of the half-gap go to the refinement gain, the last
  // quarter pays for a tie at the midpoint.
  const Dyadic gain = eps - quarter;
  const Dyadic mid = (a + b).ldexp(-1);
  const Dyadic eta = refinement_gain_bound(Interval(oracle.upper_bound()), gain).lo();
  LengthWitness w = oracle.achieve_length(eta);
  std::vector<Point> chords = chord_vectors(oracle.path(), w.partition);

  Precision p = precision_for(quarter) + 4;
  for (int i = 0; i < 16; ++i, p = p + 32) {
    Interval v = directional_variation(chords, d, p);
    if (v.lo() > mid) return {Verdict::kGreaterThanA, v, w.partition};
    if (v.hi() < mid) return {Verdict::kLessThanB, v, w.partition};
    if (v.width() < quarter) return {Verdict::kLessThanB, v, w.partition};
  }
  throw ResourceError("decide could not separate the variation from the midpoint");
}

LengthWitness CroftonLengthOracle::achieve_length(const Dyadic& eps) const {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  Precision p = precision_for(eps) + 16;
  const Dyadic tau = Dyadic::div_floor(eps.ldexp(1), pi(p).hi(), p);
  CroftonResult cr = crofton_partition(*inner_, tau, workers_);
  Interval l = polyline_length(inner_->path(), cr.partition, p);
  return {cr.partition, l, eps};
}

Dyadic CroftonLengthOracle::upper_bound() const { return length_upper_bound(*inner_).hi(); }

}  // namespace crofton
