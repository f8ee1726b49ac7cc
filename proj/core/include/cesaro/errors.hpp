#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (kernel cache, term cap, iteration cap) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An exact post-condition check failed. On a correct build this indicates a bug,
/// or a constant violated upstream.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cesaro
