#pragma once

#include <stdexcept>
#include <string>

namespace wedge {

// Bad input: malformed data, violated preconditions, caller bugs.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A computed quantity broke an invariant that should hold by construction
// (e.g. a Gram determinant far below zero).
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wedge
