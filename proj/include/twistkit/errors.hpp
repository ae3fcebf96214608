#pragma once

#include <stdexcept>

namespace twistkit {

/// Violation of an engine invariant (e.g. an inexact Wada division).
/// The CLI maps this to exit code 4.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// A configured search or size budget was exceeded. CLI exit code 3.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace twistkit
