#pragma once

#include <stdexcept>

namespace symtensor {

/// Input outside the structures the algorithms handle (e.g. a center that
/// is not block-diagonal with 1- and 2-dimensional blocks).
class UnsupportedStructure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input for which the requested object is not finite or not defined,
/// e.g. a cubic whose eigenvectors form a continuum.
class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace symtensor
