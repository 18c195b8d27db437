#pragma once

#include <stdexcept>
#include <string>

namespace eub {

// Exit-code mapping used by the CLI: invalid input -> 1, unitarity
// violation -> 2, numeric failure -> 3.

struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeLimitError : InvalidInputError {
  using InvalidInputError::InvalidInputError;
};

struct UnitarityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eub
