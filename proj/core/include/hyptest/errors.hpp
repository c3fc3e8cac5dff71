#pragma once

#include <stdexcept>
#include <string>

namespace hyptest {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must share an alphabet (or index range) do not.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A distribution lacks mass where an operation requires it, e.g. an
/// absolute-continuity violation p(x) > 0 while q(x) = 0. Raised instead
/// of returning an infinite divergence.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would visit more candidates than the caller allowed.
/// Carries the estimate so callers can degrade gracefully.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, double estimated_candidates)
      : Error(what), estimated_candidates_(estimated_candidates) {}

  double estimated_candidates() const { return estimated_candidates_; }

 private:
  double estimated_candidates_;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The request cannot produce any result (e.g. every record of a sweep was
/// skipped for budget reasons).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyptest
