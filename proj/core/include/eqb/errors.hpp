#pragma once

#include <stdexcept>
#include <string>

namespace eqb {

/// A mathematically invalid request: division by zero, singular matrix,
/// parity obstruction, inconsistent action data. The CLI maps it to exit 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or incoherent input (bad JSON shape, modulus mismatch,
/// empty group, rank 0). The CLI maps it to exit 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eqb
