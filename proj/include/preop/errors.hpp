#pragma once

#include <stdexcept>
#include <string>

namespace preop {

/// An index or degree outside the range admitted by an operation.
struct RangeError : std::out_of_range {
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Mismatched rings, dimensions or other wiring problems between values
/// that are individually well-formed.
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A name that is not present in the registry or binding table consulted.
struct LookupError : std::invalid_argument {
  explicit LookupError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace preop
