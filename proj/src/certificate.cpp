#include "crofton/certificate.hpp"

#include <stdexcept>

namespace crofton {

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::kTwoSidedConverged ? "two-sided-converged"
                                                      : "non-shrinking-bracket";
}

Certificate Certificate::converged(Interval value, Provenance provenance) {
  if (value.width() > provenance.tolerance) {
    throw std::logic_error("converged certificate wider than its tolerance");
  }
  return Certificate(std::move(value), CertificateKind::kTwoSidedConverged, std::move(provenance));
}

Certificate Certificate::bracket(Interval value, Provenance provenance) {
  return Certificate(std::move(value), CertificateKind::kNonShrinkingBracket, std::move(provenance));
}

}  // namespace crofton
