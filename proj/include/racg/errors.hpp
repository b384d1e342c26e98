#pragma once

#include <stdexcept>
#include <string>

namespace racg {

// Bad user-supplied data (malformed files, out-of-range vertices, ill-typed expressions).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity the code relies on failed to hold for the given input
// (e.g. a power-series exponent extraction produced a negative exponent).
struct identity_violation : std::runtime_error {
    explicit identity_violation(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (vertex count, truncation degree, matrix width) was exceeded.
struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check that can only fail through a bug, never bad data.
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace racg
