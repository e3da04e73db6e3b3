#pragma once

#include <stdexcept>
#include <string>

namespace betti {

/// Input violates a documented precondition of a library operation.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The greedy chain elimination could not continue on the given table.
struct not_decomposable : validation_error {
  explicit not_decomposable(const std::string& why)
      : validation_error("not greedily decomposable: " + why) {}
};

/// Malformed textual input (tables, decompositions, sequences, tuples).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace betti
