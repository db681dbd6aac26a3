#pragma once

#include <stdexcept>

namespace lattix {

// Raised when an exact (oracle-grade) computation would exceed its configured
// size cap. CLI maps this to exit code 2, validation errors to exit code 1.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lattix
