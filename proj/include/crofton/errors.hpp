#pragma once

#include <stdexcept>
#include <string>

namespace crofton {

// Argument outside the mathematical domain of an operation (sqrt of a
// negative interval, parameter outside [0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or contract-violating input: bad JSON, invalid partitions,
// mixtures with more than one nonzero bit.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bounded computation ran out of its budget (iteration cap, vertex cap,
// net size cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An oracle could not deliver its witness.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The path class admits no converging certificate (sampled graphs).
class CertificationUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crofton
