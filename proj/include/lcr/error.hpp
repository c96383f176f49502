#pragma once

#include <stdexcept>
#include <string>

namespace lcr {

/// Domain error raised by the library: bad input, violated precondition, or a
/// failed verification. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcr
