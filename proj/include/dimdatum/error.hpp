#pragma once

#include <stdexcept>
#include <string>

namespace dimdatum {

/// Malformed or unsupported input: group specs, subgroup descriptors, configs.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact computation produced a value that cannot come from an actual
/// subgroup (non-integral or negative invariant dimension, broken symmetry).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dimdatum
