#pragma once

#include <stdexcept>
#include <string>

namespace autoplex {

// A request that is well-formed but outside what the library can or will
// compute: caps exceeded, preconditions violated, unrepresentable values.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

class RepresentationOverflow : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace autoplex
