#pragma once

#include <stdexcept>
#include <string>

namespace hshift {

// Rejected input: bad parameters, out-of-range shifts, malformed files.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration would exceed the configured ceiling.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A verification found two routes that should agree but do not.
class Mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Recovery could not produce a candidate (no usable samples, or every
// candidate was filtered out).
class RecoveryFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hshift
