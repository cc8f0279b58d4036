#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "crofton/interval.hpp"
#include "crofton/rational_poly.hpp"

namespace crofton {

struct Point {
  mpq_class x;
  mpq_class y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct IntervalPoint {
  Interval x;
  Interval y;
};

// Vertices joined by segments. Vertex i sits at parameter i / 2^k where
// 2^k is the smallest power of two >= the segment count; the last vertex sits
// at 1. For power-of-two segment counts this is the uniform parametrization.
struct Polyline {
  std::vector<Point> vertices;
};

// t -> (x(t), y(t)) on [0, 1].
struct PolynomialPath {
  RationalPoly x;
  RationalPoly y;
};

// Graph t -> (t, f(t)) of a function known only through samples (t, f(t))
// and a Lipschitz constant.
struct SampledGraph {
  std::vector<Point> samples;
  mpq_class lipschitz;
};

// Graph of f_n(t) = 2^-n * dist(2^n t, Z).
struct SawtoothGraph {
  int n = 1;
};

// Graph of sum_k a_k f_k for a finite 0/1 prefix with at most one 1.
struct SawtoothMixture {
  std::vector<int> bits;
  // Index n with a_n = 1, or 0 when every bit is zero.
  int active() const;
};

using PathData = std::variant<Polyline, PolynomialPath, SampledGraph, SawtoothGraph, SawtoothMixture>;

// A validated path in the plane. Immutable once built.
class PathSpec {
 public:
  static PathSpec polyline(std::vector<Point> vertices);
  static PathSpec polynomial(RationalPoly x, RationalPoly y);
  static PathSpec sampled_graph(std::vector<Point> samples, mpq_class lipschitz);
  static PathSpec sawtooth_graph(int n);
  static PathSpec sawtooth_mixture(std::vector<int> bits);

  const PathData& data() const { return data_; }
  // "polyline", "polynomial", "sampled-graph", "sawtooth", "sawtooth-mixture".
  std::string kind() const;
  template <class T>
  const T* as() const {
    return std::get_if<T>(&data_);
  }

  // Exact alpha(t) for dyadic t in [0, 1]. Sampled graphs are exact only at
  // their sample parameters; elsewhere this throws DomainError.
  Point exact_point(const Dyadic& t) const;

 private:
  explicit PathSpec(PathData d) : data_(std::move(d)) {}
  PathData data_;
};

// Parameter of vertex i of a polyline with `count` vertices.
Dyadic polyline_parameter(std::size_t i, std::size_t count);

// 0 = x_0 <= x_1 <= ... <= x_n = 1, dyadic.
class Partition {
 public:
  // Validates endpoints and ordering; throws InvalidInput otherwise.
  explicit Partition(std::vector<Dyadic> params);
  static Partition trivial();
  // 2^k equal cells.
  static Partition uniform_pow2(int k);

  const std::vector<Dyadic>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  std::size_t cells() const { return params_.size() - 1; }
  // Every parameter of `coarser` occurs in this partition.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Dyadic> params_;
};

// Sorted union with duplicates collapsed; refines both inputs.
Partition merge_partitions(const Partition& a, const Partition& b);
// Union of many partitions; the result does not depend on input order.
Partition merge_all(std::vector<Dyadic> params);

// Enclosure of alpha(t) with coordinate widths <= 2^-bits, except for sampled
// graphs between samples, where the Lipschitz cone is the best available.
IntervalPoint eval_path(const PathSpec& path, const Dyadic& t, Precision p);

// Breakpoint partition: polyline vertices, the 2^(n+1) cells of a sawtooth,
// or the sample parameters. Polynomial paths have none.
std::optional<Partition> canonical_partition(const PathSpec& path);

}  // namespace crofton
