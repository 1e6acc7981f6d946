#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace clusterkit {

// Exact arithmetic everywhere: matrix entries and polynomial coefficients
// grow under repeated mutation, so fixed-width integers are never used for
// algebraic data.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a configurable resource cap (seed count, term count) is hit.
/// Distinct from logic errors: infinite-type exploration must fail loudly.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input (bad shapes, negative exponents, rank clashes).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an internal mathematical invariant fails. Any occurrence is a
/// bug or a desk-scale falsification of a cited theorem, never user error.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

inline int to_int(const Int& v, const char* what = "integer") {
    if (v > 1000000000 || v < -1000000000)
        throw resource_error(std::string(what) + " exceeds representable range");
    return static_cast<int>(v);
}

inline Int positive_part(const Int& a) { return a > 0 ? a : Int(0); }

}  // namespace clusterkit
