#pragma once

#include <stdexcept>
#include <string>

namespace funceq {

/// Argument lies outside an operation's mathematical domain
/// (non-positive constants, x on the wrong side of 1/R, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Computation would leave the representable s-window: results are
/// signalled instead of silently returning non-finite or resolution-less
/// values. See solution.hpp for the window constants.
struct window_error : std::range_error {
    using std::range_error::range_error;
};

/// A structural precondition failed (wrong regime for the operation,
/// constant modulation where a non-constant one is required, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace funceq
