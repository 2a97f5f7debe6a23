#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clones {

/// A full enumeration (all operations of one arity, or all candidate tables)
/// would exceed the configured cap.
class EnumerationTooLarge : public std::runtime_error {
 public:
  EnumerationTooLarge(int arity, std::size_t cap)
      : std::runtime_error("enumeration too large at arity " + std::to_string(arity) +
                           " (cap " + std::to_string(cap) + ")"),
        arity_(arity) {}

  /// For enumerations not indexed by an arity (e.g. endomorphism images).
  EnumerationTooLarge(const std::string& message, int size_hint)
      : std::runtime_error(message), arity_(size_hint) {}

  int arity() const { return arity_; }

 private:
  int arity_;
};

/// Neither exhaustive enumeration nor backtracking finished a commutant slice
/// within the configured budgets.
class IntractableSlice : public std::runtime_error {
 public:
  explicit IntractableSlice(int arity)
      : std::runtime_error("commutant slice intractable at arity " + std::to_string(arity)),
        arity_(arity) {}

  int arity() const { return arity_; }

 private:
  int arity_;
};

}  // namespace clones
