#pragma once

#include <stdexcept>
#include <string>

namespace qcollide {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: invalid arguments, malformed files, violated preconditions.
// The CLI maps these to exit code 1.
struct user_error : error {
    using error::error;
};

// Runtime numerical failure: non-convergence, eigensolver trouble.
// The CLI maps these to exit code 2.
struct numeric_error : error {
    using error::error;
};

}  // namespace qcollide
