#pragma once

#include <stdexcept>
#include <string>

namespace pipn {

  // Malformed text, out-of-range indices, invalid partitions and the like.
  class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Raised by the normalizer when its rewrite budget runs out. The staged
  // rewriting always terminates, so this indicates a defect, not bad input.
  class FuelExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace pipn
