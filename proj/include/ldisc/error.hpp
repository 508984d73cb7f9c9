#pragma once

#include <stdexcept>
#include <string>

namespace ldisc {

// Base for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (coordinate
// bound exceeded, r = 0 in a formula valid only for r >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A (u,v) point with u + v odd: it has no pixel preimage.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Enumeration refused because the radius exceeds the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Closed form evaluated on a pair that does not satisfy its hypothesis.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Overlap rectangle is nonempty over the reals but holds no pixel.
class DegenerateOverlap : public Error {
 public:
  using Error::Error;
};

}  // namespace ldisc
