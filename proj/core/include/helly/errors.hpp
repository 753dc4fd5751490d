#pragma once

#include <stdexcept>
#include <string>

namespace helly {

// Bad data handed to an operation: dimension mismatches, zero hyperplane
// normals, matchings that are not matchings, unparsable files.
struct MalformedInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact brute-force routine was asked to run above its documented limit.
struct ScaleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction spec whose cardinalities do not work out (e.g. floor(beta*n)
// too small for the requested dimension).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampling ran out of retries.
struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace helly
