#pragma once

#include <stdexcept>
#include <string>

namespace ietilt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad dimensions, unknown labels, non-composable relations.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input text that could not be parsed (algebra files, catalog files, expressions).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed, or a catalog turned out incomplete.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ietilt
