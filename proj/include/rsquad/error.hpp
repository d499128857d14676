#pragma once

#include <stdexcept>
#include <string>

namespace rsquad {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad offsets, zero divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. This means a computed quantity
/// contradicts a proven identity, i.e. a bug (or a counterexample).
class Falsification : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline void check(bool ok, const std::string& what) {
  if (!ok) throw Falsification(what);
}

}  // namespace detail
}  // namespace rsquad
