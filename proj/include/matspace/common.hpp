#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matspace {

// Field elements are stored in their canonical 0..q-1 encoding (see FieldTable).
using Elem = std::uint8_t;

// Requested field size outside the supported set {2,3,4,5,7,8,9}.
struct unsupported_field_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Shape mismatch: non-square input where a square one is required, ambient
// mismatch between subspaces, wrong generator shapes, and the like.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exhaustive operation would exceed its enumeration budget.  The message
// carries the estimated count so the caller can see how far off it was.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed matrix literal or fixture file.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inverse of a singular matrix, coordinates of a non-member, and similar
// requests that are well-formed but have no answer.
struct value_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace matspace
