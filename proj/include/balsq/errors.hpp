#pragma once

#include <stdexcept>
#include <string>

namespace balsq {

/// Malformed or inconsistent caller input (bad JSON, foreign variables,
/// violated preconditions that stem from the input data).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource bound (enumeration cap, memo size, bit width) was hit.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency assertion failed (a property the library promises).
class property_error : public std::logic_error {
 public:
  explicit property_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace balsq
