#include "crofton/counterexamples.hpp"

#include "crofton/direction.hpp"
#include "crofton/errors.hpp"
#include "crofton/oracle.hpp"

namespace crofton {

PathSpec sawtooth(int n) {
  if (n < 1) throw InvalidInput("sawtooth index must be >= 1");
  if (n > kMaxSawtoothIndex) throw ResourceError("sawtooth index above the vertex cap");
  PathSpec graph = PathSpec::sawtooth_graph(n);
  const long cells = 1L << (n + 1);
  std::vector<Point> vertices;
  vertices.reserve(static_cast<std::size_t>(cells) + 1);
  for (long i = 0; i <= cells; ++i) {
    vertices.push_back(graph.exact_point(Dyadic(mpz_class(i), -(n + 1))));
  }
  return PathSpec::polyline(std::move(vertices));
}

PathSpec mixture(const std::vector<int>& bits) {
  int m = std::get<SawtoothMixture>(PathSpec::sawtooth_mixture(bits).data()).active();
  if (m == 0) return PathSpec::polyline({{0, 0}, {1, 0}});
  return sawtooth(m);
}

PathSpec tilt(const PathSpec& graph) {
  if (const auto* pl = graph.as<Polyline>()) {
    std::vector<Point> v = pl->vertices;
    for (auto& p : v) p.y += p.x;
    return PathSpec::polyline(std::move(v));
  }
  if (const auto* sg = graph.as<SampledGraph>()) {
    std::vector<Point> s = sg->samples;
    for (auto& p : s) p.y += p.x;
    return PathSpec::sampled_graph(std::move(s), sg->lipschitz + 1);
  }
  if (const auto* st = graph.as<SawtoothGraph>()) return tilt(sawtooth(st->n));
  if (const auto* mx = graph.as<SawtoothMixture>()) return tilt(mixture(mx->bits));
  throw InvalidInput("tilt needs a graph-type path");
}

PathSpec sampled_sawtooth(int n, int k) {
  if (n < 1 || k < 1) throw InvalidInput("demo needs n >= 1 and k >= 1");
  if (k > kMaxSawtoothIndex + 1) throw ResourceError("sample grid above the cap");
  PathSpec graph = PathSpec::sawtooth_graph(n);
  const long cells = 1L << k;
  std::vector<Point> samples;
  samples.reserve(static_cast<std::size_t>(cells) + 1);
  for (long i = 0; i <= cells; ++i) samples.push_back(graph.exact_point(Dyadic(mpz_class(i), -k)));
  return PathSpec::sampled_graph(std::move(samples), 1);
}

DemoReport adversarial_demo(int n, int k) {
  PathSpec samples = sampled_sawtooth(n, k);
  Direction vertical = Direction::vertical();
  Certificate bracket = sampled_bracket(samples, vertical);
  PolylineOracle exact(sawtooth(n));
  Interval v = exact.achieve_variation(vertical, Dyadic::pow2(-64)).variation;
  return {n, k, Dyadic::pow2(-k), Dyadic::pow2(-n), bracket, v};
}

}  // namespace crofton
