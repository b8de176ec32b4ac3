#pragma once

#include <stdexcept>
#include <string>

namespace posmap {

// Input violates a documented precondition (non-Hermitian matrix, bad unitary, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a spectral function or inequality.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Internal consistency check failed (e.g. a decomposition that should be CP is not).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace posmap
