#pragma once

#include <stdexcept>
#include <string>

namespace mtpath {

/// A rational substitution did not clear its denominator: the cleared
/// expression left a nonzero remainder, so the result is not a polynomial.
struct non_polynomial_result : std::runtime_error {
    explicit non_polynomial_result(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form evaluation that must be an integer came out fractional.
/// This always signals a transcription bug, never bad input.
struct integrality_violation : std::runtime_error {
    explicit integrality_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mtpath
