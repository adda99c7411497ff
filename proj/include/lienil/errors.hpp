#pragma once

#include <stdexcept>
#include <string>

namespace lienil {

// Malformed or out-of-range input: bad indices, composite moduli,
// invalid presentations, mismatched ambient spaces.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called on an object that is not in the required state,
// e.g. an incomplete series or a chain that was not computed deep enough.
class StateError : public std::logic_error {
 public:
  explicit StateError(const std::string& what) : std::logic_error(what) {}
};

// A mathematical precondition fails (e.g. G is not nilpotent).
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lienil
