#pragma once

#include <stdexcept>
#include <string>

namespace superlie {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: files, indices, expressions. Distinct from axiom
// violations, which are reported through ValidationReport.
class InputError : public Error {
 public:
  using Error::Error;
};

// Precondition violations: non-nilpotent input to a classifier, a subspace
// that is not an ideal, parameters outside a formula's stated range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation refused because it exceeds the configured oracle limits.
class LimitError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug, never user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace superlie
