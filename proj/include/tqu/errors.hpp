#pragma once

#include <stdexcept>
#include <string>

namespace tqu {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad generator, non-open cover member,
/// parse failure, mismatched topologies, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A request that would exceed a configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The operation has no construction for this input (e.g. an l-base without
/// an infinite strictly monotone chain).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A filter presentation whose generators meet in the empty set.
class ImproperFilterError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace tqu
