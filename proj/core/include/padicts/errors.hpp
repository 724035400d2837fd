#pragma once

#include <stdexcept>
#include <string>

namespace padicts {

/// Thrown when an argument violates a documented parameter constraint
/// (non-prime p, alpha <= 0, prime mismatch between operands, ...).
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a series length does not satisfy the block/window structure
/// an operation requires (not a power of p, not divisible by the block size).
class invalid_length : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation would exceed a configured resource cap.
class resource_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when input data violates a documented precondition that is not a
/// simple parameter-range check (e.g. a window that is not mean-free).
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace padicts
