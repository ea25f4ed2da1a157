#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Invalid user input (bad parameters, malformed tables) is reported with
// std::invalid_argument. The two classes below cover the remaining cases.

/// A configured size bound was exceeded (subgroup cap, enumeration bound).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An invariant the mathematics guarantees did not hold, e.g. a Burnside
/// average that is not integral. Always indicates a bug or a faulty formula.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cayley
