#pragma once

#include <stdexcept>
#include <string>

namespace indseq {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: bad endpoint, loop, duplicate edge, missing mark.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A precondition on a polynomial argument was violated (e.g. zero polynomial).
class PolyError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed its configured size or work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Numerical cross-check could not be carried out (e.g. root finder stalled).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace indseq
