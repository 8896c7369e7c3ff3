#pragma once

#include <stdexcept>
#include <string>

namespace taylorhess {

/// Caller passed arguments that violate an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematically undefined request (e.g. inverting a series with q(0) != 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters outside the family an operation supports (e.g. n != 2).
class UnsupportedParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace taylorhess
