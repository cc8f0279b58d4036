#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crofton/interval.hpp"
#include "crofton/path.hpp"

namespace crofton {

enum class CertificateKind {
  // The enclosure provably contains the quantity and can be made as narrow
  // as requested.
  kTwoSidedConverged,
  // Sound bounds that further sampling need not tighten.
  kNonShrinkingBracket,
};

std::string to_string(CertificateKind kind);

struct NetSummary {
  std::uint64_t size = 0;
  Dyadic delta;
};

struct Provenance {
  std::optional<Partition> partition;
  std::optional<NetSummary> net;
  Dyadic tolerance;
  // Named pieces of the error budget, in the order they were spent.
  std::vector<std::pair<std::string, Dyadic>> budget;
  std::vector<std::string> oracles;
};

class Certificate {
 public:
  // Throws std::logic_error if the value is wider than the tolerance.
  static Certificate converged(Interval value, Provenance provenance);
  static Certificate bracket(Interval value, Provenance provenance);

  const Interval& value() const { return value_; }
  CertificateKind kind() const { return kind_; }
  const Provenance& provenance() const { return provenance_; }

 private:
  Certificate(Interval v, CertificateKind k, Provenance p)
      : value_(std::move(v)), kind_(k), provenance_(std::move(p)) {}

  Interval value_;
  CertificateKind kind_;
  Provenance provenance_;
};

}  // namespace crofton
