#pragma once

#include <stdexcept>
#include <string>

namespace hmr {

/// Bad input to an operation: out-of-range parameter, dimension mismatch,
/// violated precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds a configured computational budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table lookup (e.g. a Ramsey number) has no entry.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed external data: graph6 strings, certificate files, TSV tables.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hmr
