#include "crofton/oracle.hpp"

#include <algorithm>
#include <bit>

#include "crofton/chords.hpp"
#include "crofton/elementary.hpp"
#include "crofton/errors.hpp"
#include "crofton/variation.hpp"

namespace crofton {
namespace {

bool piecewise_linear(const PathSpec& path) {
  return path.as<Polyline>() || path.as<SawtoothGraph>() || path.as<SawtoothMixture>();
}

Precision enclosure_precision(const Dyadic& eps, std::size_t cells) {
  int base = std::max(64, precision_for(eps).bits + 16);
  return Precision(base + static_cast<int>(std::bit_width(cells)));
}

// Largest cell count the length oracle will materialize.
constexpr int kMaxUniformExponent = 24;

// Upper bound for the arc length over the uniform 2^k-cell partition with
// the given chords.
Dyadic arc_length_upper(const std::vector<Point>& chords, const RationalPoly& ddx, const RationalPoly& ddy,
                        int k, Precision p) {
  const Dyadic h = Dyadic::pow2(-k);
  const Dyadic h2 = h * h, h4 = h2 * h2;
  Dyadic total(0);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    Interval cell(Dyadic(mpz_class(static_cast<unsigned long>(i)), -k),
                  Dyadic(mpz_class(static_cast<unsigned long>(i + 1)), -k));
    Dyadic kx = ddx.evaluate(cell, p).mag(), ky = ddy.evaluate(cell, p).mag();
    Dyadic k2 = kx * kx + ky * ky;
    Interval c = chord_length(chords[i], p);
    Dyadic extra = h2 * Dyadic::sqrt_ceil(k2, p);
    if (c.lo().sign() > 0) extra = min(extra, Dyadic::div_ceil(h4 * k2, c.lo().ldexp(1), p));
    total = total + c.hi() + extra;
  }
  return total;
}

}  // namespace

Dyadic LengthOracle::upper_bound() const {
  LengthWitness w = achieve_length(Dyadic::pow2(-2));
  return w.length.hi() + w.defect;
}

PolylineOracle::PolylineOracle(PathSpec path)
    : path_(std::move(path)), vertices_(Partition::trivial()) {
  if (!piecewise_linear(path_)) throw InvalidInput("polyline oracle needs a piecewise-linear path");
  vertices_ = *canonical_partition(path_);
  chords_ = chord_vectors(path_, vertices_);
}

VariationWitness PolylineOracle::achieve_variation(const Direction& d, const Dyadic& eps) const {
  Interval v = directional_variation(chords_, d, enclosure_precision(eps, chords_.size()));
  return {vertices_, v, Dyadic(0)};
}

LengthWitness PolylineOracle::achieve_length(const Dyadic& eps) const {
  Interval l = polyline_length(chords_, enclosure_precision(eps, chords_.size()));
  return {vertices_, l, Dyadic(0)};
}

Dyadic PolylineOracle::upper_bound() const { return polyline_length(chords_, Precision(64)).hi(); }

PolynomialOracle::PolynomialOracle(PathSpec path) : path_(std::move(path)) {
  const auto* poly = path_.as<PolynomialPath>();
  if (!poly) throw InvalidInput("polynomial oracle needs a polynomial path");
  dx_ = poly->x.derivative();
  dy_ = poly->y.derivative();
  ddx_ = dx_.derivative();
  ddy_ = dy_.derivative();
  length_bound_ = integrate_speed_upper(dx_, dy_, 16).hi();
}

VariationWitness PolynomialOracle::achieve_exact(const Point& w, const Dyadic& eps) const {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  const auto& poly = *path_.as<PolynomialPath>();
  RationalPoly r = w.x * poly.x + w.y * poly.y;
  RationalPoly rp = r.derivative();

  std::vector<RootInterval> roots;
  RationalPoly sf;
  if (!rp.is_zero()) {
    sf = square_free_part(rp);
    for (const auto& iso : sturm_isolate(rp, Dyadic(0), Dyadic(1))) {
      if (iso.exact() && (iso.lo.is_zero() || iso.lo == Dyadic(1))) continue;
      roots.push_back(iso);
    }
  }

  // Each breakpoint placed inside a root interval loses at most twice the
  // oscillation of r over that interval.
  Precision ep = precision_for(eps) + (static_cast<int>(std::bit_width(roots.size())) + 8);
  auto slack = [&](const RootInterval& iso) {
    if (iso.exact()) return Dyadic(0);
    return r.evaluate(Interval(iso.lo, iso.hi), ep).width().ldexp(1);
  };
  std::vector<Dyadic> slacks;
  Dyadic total;
  for (const auto& iso : roots) {
    slacks.push_back(slack(iso));
    total += slacks.back();
  }
  while (total > eps) {
    auto k = static_cast<std::size_t>(std::max_element(slacks.begin(), slacks.end()) - slacks.begin());
    Dyadic half = (roots[k].hi - roots[k].lo).ldexp(-1);
    roots[k] = refine_root(sf, roots[k], half);
    total -= slacks[k];
    slacks[k] = slack(roots[k]);
    total += slacks[k];
  }

  std::vector<Dyadic> params{Dyadic(0)};
  for (const auto& iso : roots) params.push_back(iso.exact() ? iso.lo : (iso.lo + iso.hi).ldexp(-1));
  params.push_back(Dyadic(1));
  Partition partition = merge_all(std::move(params));

  mpq_class sum = 0;
  const auto& ps = partition.params();
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    sum += abs(r(ps[i + 1].to_rational()) - r(ps[i].to_rational()));
  }
  return {partition, Interval::of(sum, ep), total};
}

VariationWitness PolynomialOracle::achieve_variation(const Direction& d, const Dyadic& eps) const {
  if (d.exact()) return achieve_exact(*d.exact(), eps);
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  // Snap to a nearby rational direction. Rotating by s changes every
  // partition's variation by at most 2 l s <= 2 M s, once for the supremum
  // and once for the witness, so the snap costs 4 M s.
  const Dyadic half = eps.ldexp(-1);
  const Dyadic bound = length_bound_;
  const Interval pie = pi(precision_for(eps) + 16);
  const Dyadic bound1 = bound + Dyadic(1);
  Precision dp = precision_for(eps) + (8 + static_cast<int>(std::max<std::int64_t>(0, bound1.msb() + 1)));
  Precision q = precision_for(Dyadic::div_floor(eps, bound1, dp)) + 6;
  for (int attempt = 0; attempt < 64; ++attempt, q = q + 4) {
    Direction snapped = Direction::from_stereographic(stereographic_parameter(d.theta(), q), q + 8);
    Interval diff = snapped.theta() - d.theta();
    if (diff.mid() > pie.mid().ldexp(-1)) diff -= pie;
    if (diff.mid() < -pie.mid().ldexp(-1)) diff += pie;
    Dyadic snap_cost = (Interval(bound.ldexp(2)) * Interval(diff.mag())).hi();
    if (snap_cost > half) continue;
    VariationWitness w = achieve_exact(*snapped.exact(), half);
    Precision ep = enclosure_precision(eps, w.partition.cells());
    w.variation = directional_variation(path_, w.partition, d, ep);
    w.defect = w.defect + snap_cost;
    return w;
  }
  throw OracleError("direction enclosure too wide for the requested tolerance");
}

LengthWitness PolynomialOracle::achieve_length(const Dyadic& eps) const {
  if (eps.sign() <= 0) throw InvalidInput("eps must be positive");
  Dyadic best_gap;
  bool have_gap = false;
  for (int k = 3; k <= 3 + kMaxDoublings; ++k) {
    if (k > kMaxUniformExponent) {
      throw ResourceError("polynomial length oracle exceeded its cell budget; best gap " +
                          (have_gap ? best_gap.to_decimal_ceil(12) : std::string("unknown")));
    }
    Partition p = Partition::uniform_pow2(k);
    std::vector<Point> chords = chord_vectors(path_, p);
    Precision ep = enclosure_precision(eps, chords.size());
    Interval l = polyline_length(chords, ep);
    Dyadic upper = arc_length_upper(chords, ddx_, ddy_, k, ep);
    Dyadic gap = max(Dyadic(0), upper - l.lo());
    if (gap <= eps) return {p, l, gap};
    best_gap = have_gap ? min(best_gap, gap) : gap;
    have_gap = true;
  }
  throw ResourceError("polynomial length oracle exhausted its refinement cap; best gap " +
                      best_gap.to_decimal_ceil(12));
}

std::shared_ptr<const VariationOracle> make_variation_oracle(const PathSpec& path) {
  if (path.as<SampledGraph>()) {
    throw CertificationUnavailable("sampled graphs admit only non-shrinking brackets");
  }
  if (path.as<PolynomialPath>()) return std::make_shared<PolynomialOracle>(path);
  return std::make_shared<PolylineOracle>(path);
}

std::shared_ptr<const LengthOracle> make_length_oracle(const PathSpec& path) {
  if (path.as<SampledGraph>()) {
    throw CertificationUnavailable("sampled graphs admit only non-shrinking brackets");
  }
  if (path.as<PolynomialPath>()) return std::make_shared<PolynomialOracle>(path);
  return std::make_shared<PolylineOracle>(path);
}

namespace {

const SampledGraph& require_sampled(const PathSpec& path) {
  const auto* g = path.as<SampledGraph>();
  if (!g) throw InvalidInput("bracket needs a sampled graph");
  return *g;
}

Provenance bracket_provenance(Partition partition, const Interval& value) {
  Provenance prov;
  prov.partition = std::move(partition);
  prov.tolerance = value.width();
  prov.oracles = {"sampled-lipschitz"};
  return prov;
}

}  // namespace

Certificate sampled_bracket(const PathSpec& path, const Direction& d) {
  const SampledGraph& g = require_sampled(path);
  Partition p = *canonical_partition(path);
  Interval v = directional_variation(path, p, d, Precision(64));
  Dyadic lip = Dyadic::ceil_of(g.lipschitz, Precision(64));
  Dyadic upper = abs(d.wx()).hi() + (abs(d.wy()) * Interval(lip)).hi();
  Interval value(v.lo(), max(upper, v.hi()));
  return Certificate::bracket(value, bracket_provenance(p, value));
}

Certificate sampled_length_bracket(const PathSpec& path) {
  const SampledGraph& g = require_sampled(path);
  Partition p = *canonical_partition(path);
  Interval l = polyline_length(path, p, Precision(64));
  Interval cap = sqrt_of(1 + g.lipschitz * g.lipschitz, Precision(64));
  Interval value(l.lo(), max(cap.hi(), l.hi()));
  return Certificate::bracket(value, bracket_provenance(p, value));
}

}  // namespace crofton
