#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>

namespace cayley_census {

/// Raised when an argument lies outside an operation's domain. The CLI maps
/// every subclass to exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidAutomorphism : public DomainError {
 public:
  using DomainError::DomainError;
};

class SquareFreeRequired : public DomainError {
 public:
  using DomainError::DomainError;
};

class HypothesisViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotApplicable : public DomainError {
 public:
  using DomainError::DomainError;
};

class TooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computation produced a value that contradicts a proven identity, e.g. a
/// Burnside sum not divisible by the group order. Always a bug; exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

// Lazy forms for hot paths: the message is only built on failure.
template <std::invocable F>
void require(bool ok, F&& what) {
  if (!ok) throw DomainError(std::forward<F>(what)());
}

template <std::invocable F>
void ensure(bool ok, F&& what) {
  if (!ok) throw InvariantViolation(std::forward<F>(what)());
}

}  // namespace cayley_census
