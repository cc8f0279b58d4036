#pragma once

#include <cstdint>
#include <memory>

#include "crofton/certificate.hpp"
#include "crofton/direction.hpp"
#include "crofton/oracle.hpp"

namespace crofton {

// sqrt(L^2 + eps^2) - L, the least length increase of any refinement that
// reveals more than eps extra variation. Decreasing in L, so lo() of the
// result is a safe threshold for every l <= hi(L).
Interval refinement_gain_bound(const Interval& L, const Dyadic& eps);

struct NetBudget {
  Dyadic eps;
  Dyadic length_bound;
  Dyadic node_tolerance;  // eps / 3
  Dyadic snap_bound;      // max distance from a node to its rational representative
};

// Uniform net theta_j = j pi / K, j < K, over [0, pi), each node snapped to a
// rational direction. Nodes are produced on demand. Every direction lies
// within delta() of some snapped node modulo pi, and delta() <= eps / (6 M).
class DirectionNet {
 public:
  static DirectionNet build(const Interval& M, const Dyadic& eps);

  std::uint64_t size() const { return size_; }
  const Dyadic& delta() const { return delta_; }
  const NetBudget& budget() const { return budget_; }

  // Enclosure of j pi / K.
  Interval angle(std::uint64_t j) const;
  // Rational direction within budget().snap_bound of angle(j). Node 0 is
  // exactly horizontal.
  Direction node(std::uint64_t j) const;

 private:
  DirectionNet() = default;

  std::uint64_t size_ = 0;
  Dyadic delta_;
  NetBudget budget_;
  Precision snap_precision_;
};

// Refuse to enumerate nets larger than this.
inline constexpr std::uint64_t kMaxNetNodes = std::uint64_t{1} << 24;

struct CroftonResult {
  Partition partition;
  DirectionNet net;
  Interval length_bound;
};

// One partition P with v_theta - v_{theta,P} <= eps for every theta.
// Oracle calls for the net nodes are spread over `workers` threads; the
// result does not depend on the schedule. If the oracle knows a partition
// exact for all directions at once it is used directly.
CroftonResult crofton_partition(const VariationOracle& oracle, const Dyadic& eps, unsigned workers = 1);

// Converged enclosure of l(alpha) of width <= eps.
Certificate certified_length(const VariationOracle& oracle, const Dyadic& eps, unsigned workers = 1);

// Converged enclosure of v_w(alpha) of width <= eps, from a length oracle.
Certificate certified_variation(const LengthOracle& oracle, const Direction& d, const Dyadic& eps);

// Converged enclosure of v_w(alpha) of width <= eps straight from a
// variation oracle.
Certificate direct_variation(const VariationOracle& oracle, const Direction& d, const Dyadic& eps);

enum class Verdict { kGreaterThanA, kLessThanB };
std::string to_string(Verdict v);

struct Decision {
  Verdict verdict;
  Interval variation;  // v_{w,P} on the partition used
  Partition partition;
};

// Decides v_w(alpha) > a or v_w(alpha) < b for a < b. When both hold either
// verdict may be returned.
Decision variation_order_decide(const LengthOracle& oracle, const Direction& d, const Dyadic& a,
                                const Dyadic& b);

// Length oracle built from a variation oracle via crofton_partition.
class CroftonLengthOracle final : public LengthOracle {
 public:
  explicit CroftonLengthOracle(std::shared_ptr<const VariationOracle> inner, unsigned workers = 1)
      : inner_(std::move(inner)), workers_(workers) {}

  const PathSpec& path() const override { return inner_->path(); }
  std::string id() const override { return "crofton(" + inner_->id() + ")"; }
  LengthWitness achieve_length(const Dyadic& eps) const override;
  Dyadic upper_bound() const override;

 private:
  std::shared_ptr<const VariationOracle> inner_;
  unsigned workers_;
};

}  // namespace crofton
