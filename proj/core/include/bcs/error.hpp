#pragma once

#include <stdexcept>
#include <string>

namespace bcs {

// Malformed or out-of-contract input: bad ids, degenerate geometry, bad JSON.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact oracle or table refused because the instance exceeds its size cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A structural property the algorithms rely on was observed to fail at runtime.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bcs
