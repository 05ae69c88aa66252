#pragma once

#include <stdexcept>
#include <string>

namespace exnet {

// Shape or dimension disagreement between tensors.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument value: bad index, empty input, out-of-range label, ...
struct ValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent or invalid model/run configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values encountered at runtime (diverged training, bad input).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace exnet
