#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crofton/certificate.hpp"
#include "crofton/direction.hpp"
#include "crofton/path.hpp"

namespace crofton {

// A partition together with the enclosure of the quantity it achieves and
// the guaranteed remaining defect: the supremum over all partitions lies in
// [lo(value), hi(value) + defect].
struct VariationWitness {
  Partition partition;
  Interval variation;
  Dyadic defect;
};

struct LengthWitness {
  Partition partition;
  Interval length;
  Dyadic defect;
};

// "Give me a partition witnessing v_w to within eps."
// Implementations are immutable and safe to call from several threads.
class VariationOracle {
 public:
  virtual ~VariationOracle() = default;
  virtual const PathSpec& path() const = 0;
  virtual std::string id() const = 0;
  // defect <= eps.
  virtual VariationWitness achieve_variation(const Direction& d, const Dyadic& eps) const = 0;
  // One partition that attains v_w for every direction at once, if known.
  virtual std::optional<Partition> exact_partition() const { return std::nullopt; }
};

// "Give me a partition witnessing l to within eps."
class LengthOracle {
 public:
  virtual ~LengthOracle() = default;
  virtual const PathSpec& path() const = 0;
  virtual std::string id() const = 0;
  // defect <= eps.
  virtual LengthWitness achieve_length(const Dyadic& eps) const = 0;
  // Some L >= l(alpha).
  virtual Dyadic upper_bound() const;
};

// Exact oracle for piecewise-linear paths (polylines, sawtooth graphs and
// mixtures): the breakpoint partition attains both suprema.
class PolylineOracle final : public VariationOracle, public LengthOracle {
 public:
  explicit PolylineOracle(PathSpec path);

  const PathSpec& path() const override { return path_; }
  std::string id() const override { return "polyline-vertex"; }
  VariationWitness achieve_variation(const Direction& d, const Dyadic& eps) const override;
  std::optional<Partition> exact_partition() const override { return vertices_; }
  LengthWitness achieve_length(const Dyadic& eps) const override;
  Dyadic upper_bound() const override;

 private:
  PathSpec path_;
  Partition vertices_;
  std::vector<Point> chords_;
};

// Oracles for polynomial paths: critical points of projections (Sturm
// isolation) for variation, uniform refinement for length. On a cell of
// width h with chord c and |alpha''| <= K the arc is at most
// c + min(K h^2, K^2 h^4 / (2c)), so the length gap closes like h^2.
class PolynomialOracle final : public VariationOracle, public LengthOracle {
 public:
  // Uniform refinement starts at 8 cells and doubles at most this many times.
  static constexpr int kMaxDoublings = 30;

  explicit PolynomialOracle(PathSpec path);

  const PathSpec& path() const override { return path_; }
  std::string id() const override { return "polynomial-sturm"; }
  VariationWitness achieve_variation(const Direction& d, const Dyadic& eps) const override;
  LengthWitness achieve_length(const Dyadic& eps) const override;
  Dyadic upper_bound() const override { return length_bound_; }

  // Variation witness for an exact rational unit vector w.
  VariationWitness achieve_exact(const Point& w, const Dyadic& eps) const;

 private:
  PathSpec path_;
  RationalPoly dx_;
  RationalPoly dy_;
  RationalPoly ddx_;
  RationalPoly ddy_;
  Dyadic length_bound_;
};

// Polyline oracle for piecewise-linear kinds, polynomial oracle for
// polynomial paths. Sampled graphs throw CertificationUnavailable.
std::shared_ptr<const VariationOracle> make_variation_oracle(const PathSpec& path);
std::shared_ptr<const LengthOracle> make_length_oracle(const PathSpec& path);

// Sound bracket [v_{w,S}, |w1| + |w2| L] for a sampled graph with samples S
// and Lipschitz constant L. The bracket need not shrink as samples are added.
Certificate sampled_bracket(const PathSpec& path, const Direction& d);
// Length analogue: [l_S, sqrt(1 + L^2)].
Certificate sampled_length_bracket(const PathSpec& path);

}  // namespace crofton
