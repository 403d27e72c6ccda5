#pragma once

#include <stdexcept>
#include <string>

namespace hitchin {

// Input data violates a documented invariant or an operation precondition.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Request is well-formed but outside the decidable scope (e.g. a complete
// semistability decision for rank > 2).
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hitchin
