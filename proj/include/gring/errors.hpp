#pragma once

#include <stdexcept>

namespace gring {

// Malformed input: bad parameters, level mismatches, broken model files.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid request the model cannot serve (unbounded carrier,
// level beyond a table model's bound).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range. Never wraps.
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gring
