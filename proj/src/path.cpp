#include "crofton/path.hpp"

#include <algorithm>
#include <bit>

#include "crofton/errors.hpp"

namespace crofton {
namespace {

constexpr int kMaxSawtoothCellsLog2 = 22;

// f_n(t) = 2^-n * dist(2^n t, Z), exact for dyadic t.
Dyadic sawtooth_value(int n, const Dyadic& t) {
  Dyadic s = t.ldexp(n);
  Dyadic frac = s - s.floor_to(Precision(0));
  Dyadic d = min(frac, Dyadic(1) - frac);
  return d.ldexp(-n);
}

int segments_log2(std::size_t segments) {
  return static_cast<int>(std::bit_width(segments - 1));
}

Point lerp(const Point& a, const Point& b, const mpq_class& lambda) {
  return {a.x + lambda * (b.x - a.x), a.y + lambda * (b.y - a.y)};
}

Partition sawtooth_partition(int n) {
  if (n + 1 > kMaxSawtoothCellsLog2) throw ResourceError("sawtooth partition exceeds the vertex cap");
  return Partition::uniform_pow2(n + 1);
}

}  // namespace

int SawtoothMixture::active() const {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) return static_cast<int>(i + 1);
  }
  return 0;
}

PathSpec PathSpec::polyline(std::vector<Point> vertices) {
  if (vertices.size() < 2) throw InvalidInput("polyline needs at least 2 vertices");
  return PathSpec(Polyline{std::move(vertices)});
}

PathSpec PathSpec::polynomial(RationalPoly x, RationalPoly y) {
  return PathSpec(PolynomialPath{std::move(x), std::move(y)});
}

PathSpec PathSpec::sampled_graph(std::vector<Point> samples, mpq_class lipschitz) {
  if (samples.size() < 2) throw InvalidInput("sampled graph needs at least 2 samples");
  if (lipschitz < 0) throw InvalidInput("Lipschitz constant must be >= 0");
  if (samples.front().x != 0 || samples.back().x != 1) {
    throw InvalidInput("sample parameters must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const mpz_class& den = samples[i].x.get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1) {
      throw InvalidInput("sample parameters must be dyadic rationals");
    }
    if (i > 0 && !(samples[i - 1].x < samples[i].x)) {
      throw InvalidInput("sample parameters must be strictly increasing");
    }
    if (i > 0 && abs(samples[i].y - samples[i - 1].y) > lipschitz * (samples[i].x - samples[i - 1].x)) {
      throw InvalidInput("samples violate the declared Lipschitz constant");
    }
  }
  return PathSpec(SampledGraph{std::move(samples), std::move(lipschitz)});
}

PathSpec PathSpec::sawtooth_graph(int n) {
  if (n < 1) throw InvalidInput("sawtooth index must be >= 1");
  return PathSpec(SawtoothGraph{n});
}

PathSpec PathSpec::sawtooth_mixture(std::vector<int> bits) {
  int ones = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidInput("mixture bits must be 0 or 1");
    ones += b;
  }
  if (ones > 1) throw InvalidInput("mixture sequence may contain at most one nonzero term");
  return PathSpec(SawtoothMixture{std::move(bits)});
}

std::string PathSpec::kind() const {
  struct {
    std::string operator()(const Polyline&) const { return "polyline"; }
    std::string operator()(const PolynomialPath&) const { return "polynomial"; }
    std::string operator()(const SampledGraph&) const { return "sampled-graph"; }
    std::string operator()(const SawtoothGraph&) const { return "sawtooth"; }
    std::string operator()(const SawtoothMixture&) const { return "sawtooth-mixture"; }
  } visitor;
  return std::visit(visitor, data_);
}

Dyadic polyline_parameter(std::size_t i, std::size_t count) {
  std::size_t segments = count - 1;
  if (i >= segments) return Dyadic(1);
  return Dyadic(mpz_class(static_cast<unsigned long>(i)), -segments_log2(segments));
}

Point PathSpec::exact_point(const Dyadic& t) const {
  if (t.sign() < 0 || t > Dyadic(1)) throw DomainError("path parameter outside [0, 1]");
  if (const auto* pl = as<Polyline>()) {
    const auto& v = pl->vertices;
    std::size_t segments = v.size() - 1;
    int k = segments_log2(segments);
    // Segment j covers [j / 2^k, (j + 1) / 2^k], the last one ends at 1.
    Dyadic scaled = t.ldexp(k).floor_to(Precision(0));
    std::size_t j = std::min<std::size_t>(segments - 1, scaled.to_rational().get_num().get_ui());
    Dyadic a = polyline_parameter(j, v.size()), b = polyline_parameter(j + 1, v.size());
    mpq_class lambda = (t - a).to_rational() / (b - a).to_rational();
    return lerp(v[j], v[j + 1], lambda);
  }
  if (const auto* poly = as<PolynomialPath>()) {
    mpq_class q = t.to_rational();
    return {poly->x(q), poly->y(q)};
  }
  if (const auto* sg = as<SampledGraph>()) {
    mpq_class q = t.to_rational();
    auto it = std::lower_bound(sg->samples.begin(), sg->samples.end(), q,
                               [](const Point& s, const mpq_class& v) { return s.x < v; });
    if (it == sg->samples.end() || it->x != q) {
      throw DomainError("sampled graph is known only at its sample parameters");
    }
    return *it;
  }
  if (const auto* st = as<SawtoothGraph>()) {
    return {t.to_rational(), sawtooth_value(st->n, t).to_rational()};
  }
  const auto& mix = std::get<SawtoothMixture>(data_);
  int n = mix.active();
  return {t.to_rational(), n == 0 ? mpq_class(0) : sawtooth_value(n, t).to_rational()};
}

Partition::Partition(std::vector<Dyadic> params) : params_(std::move(params)) {
  if (params_.size() < 2) throw InvalidInput("partition needs at least the endpoints 0 and 1");
  if (!params_.front().is_zero() || params_.back() != Dyadic(1)) {
    throw InvalidInput("partition must start at 0 and end at 1");
  }
  if (!std::is_sorted(params_.begin(), params_.end())) {
    throw InvalidInput("partition parameters must be nondecreasing");
  }
}

Partition Partition::trivial() { return Partition({Dyadic(0), Dyadic(1)}); }

Partition Partition::uniform_pow2(int k) {
  std::vector<Dyadic> p;
  unsigned long cells = 1UL << k;
  p.reserve(cells + 1);
  for (unsigned long i = 0; i <= cells; ++i) p.emplace_back(mpz_class(i), -k);
  return Partition(std::move(p));
}

bool Partition::refines(const Partition& coarser) const {
  return std::includes(params_.begin(), params_.end(), coarser.params_.begin(), coarser.params_.end());
}

Partition merge_partitions(const Partition& a, const Partition& b) {
  std::vector<Dyadic> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.params().begin(), a.params().end(), b.params().begin(), b.params().end(),
                 std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Partition(std::move(out));
}

Partition merge_all(std::vector<Dyadic> params) {
  params.emplace_back(0);
  params.emplace_back(1);
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  return Partition(std::move(params));
}

IntervalPoint eval_path(const PathSpec& path, const Dyadic& t, Precision p) {
  if (const auto* sg = path.as<SampledGraph>()) {
    if (t.sign() < 0 || t > Dyadic(1)) throw DomainError("path parameter outside [0, 1]");
    mpq_class q = t.to_rational();
    auto it = std::lower_bound(sg->samples.begin(), sg->samples.end(), q,
                               [](const Point& s, const mpq_class& v) { return s.x < v; });
    if (it->x == q) return {Interval(t), Interval::of(it->y, p)};
    // Between samples: intersect the two Lipschitz cones.
    const Point& right = *it;
    const Point& left = *(it - 1);
    mpq_class lo = std::max(left.y - sg->lipschitz * (q - left.x), right.y - sg->lipschitz * (right.x - q));
    mpq_class hi = std::min(left.y + sg->lipschitz * (q - left.x), right.y + sg->lipschitz * (right.x - q));
    return {Interval(t), Interval(Dyadic::floor_of(lo, p), Dyadic::ceil_of(hi, p))};
  }
  Point pt = path.exact_point(t);
  return {Interval::of(pt.x, p), Interval::of(pt.y, p)};
}

std::optional<Partition> canonical_partition(const PathSpec& path) {
  if (const auto* pl = path.as<Polyline>()) {
    std::vector<Dyadic> p;
    for (std::size_t i = 0; i < pl->vertices.size(); ++i) {
      p.push_back(polyline_parameter(i, pl->vertices.size()));
    }
    return Partition(std::move(p));
  }
  if (path.as<PolynomialPath>()) return std::nullopt;
  if (const auto* sg = path.as<SampledGraph>()) {
    // Sample parameters are dyadic, so this conversion is exact.
    std::vector<Dyadic> p;
    for (const auto& s : sg->samples) {
      auto den_bits = static_cast<int>(mpz_sizeinbase(s.x.get_den_mpz_t(), 2)) - 1;
      p.push_back(Dyadic::floor_of(s.x, Precision(den_bits)));
    }
    return Partition(std::move(p));
  }
  if (const auto* st = path.as<SawtoothGraph>()) return sawtooth_partition(st->n);
  int n = std::get<SawtoothMixture>(path.data()).active();
  if (n == 0) return Partition::trivial();
  return sawtooth_partition(n);
}

}  // namespace crofton
