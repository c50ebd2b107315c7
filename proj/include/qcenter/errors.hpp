#pragma once

#include <stdexcept>
#include <string>

namespace qcenter {

// Bad user input (unsupported type, malformed flags, non-dominant weight, ...).
struct invalid_argument : std::runtime_error {
    explicit invalid_argument(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical invariant that the theory guarantees failed to hold
// (d^2 != 0, singular-vector space not one-dimensional, unsolvable sign
// system).  Always indicates a bug, never bad input.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Result-cache I/O failure (unwritable directory etc.).
struct cache_error : std::runtime_error {
    explicit cache_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qcenter
