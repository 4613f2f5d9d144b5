#pragma once

#include <stdexcept>
#include <string>

namespace penrose {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Integer overflow in exact arithmetic.  Results are never silently wrapped.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A weight failed a dominance requirement.  For bundle validation `node`
// is the first offending uncrossed node (1-based); 0 when not applicable.
class NotLeviDominant : public Error {
 public:
  NotLeviDominant(const std::string& what, int node) : Error(what), node_(node) {}
  int node() const { return node_; }

 private:
  int node_ = 0;
};

// A virtual character could not be written as a nonnegative sum of
// irreducible Levi characters.
class PeelingFailure : public Error {
 public:
  explicit PeelingFailure(const std::string& what) : Error(what) {}
};

// Mismatched spaces, out-of-range indices, unsupported argument combinations.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace penrose
