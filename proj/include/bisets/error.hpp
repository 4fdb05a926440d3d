#pragma once

#include <stdexcept>
#include <string>

namespace bisets {

/// Malformed user input: group specs, generator lists, field names, CLI values.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural precondition was violated (wrong ambient group, subgroup not closed, ...).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A self-check failed: a table is not an action, a transport is not functorial,
/// a map does not descend to a quotient. These indicate a bug or corrupted data,
/// never a user mistake.
class AssertionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check(bool condition, const std::string& what) {
  if (!condition) throw AssertionFailure(what);
}

}  // namespace bisets
