#pragma once

#include <stdexcept>
#include <string>

namespace rankfn {

/// Malformed or unreadable input (files, matrices, configs). CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition does not hold. CLI exit code 3.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant was violated (grid monotonicity, negative
/// inclusion-exclusion multiplicity, ...). CLI exit code 4.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rankfn
