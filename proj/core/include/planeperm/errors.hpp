#pragma once

#include <stdexcept>
#include <string>

namespace planeperm {

// Malformed textual input (one-line permutations, sequences).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation was asked to enumerate or search beyond its configured cap.
// The message always names the cap that was hit.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace planeperm
