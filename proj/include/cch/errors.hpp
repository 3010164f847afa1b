#pragma once

#include <stdexcept>
#include <string>

namespace cch {

/// Malformed or inconsistent input data (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A cross-check between two independent computations disagreed (exit code 3).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A mathematical failure detected in the data, e.g. a differential that
/// does not square to zero (exit code 4).
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check_internal(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

}  // namespace cch
