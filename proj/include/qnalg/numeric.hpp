#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qnalg {

// Exact arithmetic everywhere: arbitrary-precision integers for counts,
// rationals for linear algebra and series coefficients.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a requested computation exceeds the configured size caps.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rational& v) { return v.str(); }

// Rationals that are known to be integers (dimensions, counts).
inline Int as_integer(const Rational& v) {
    if (boost::multiprecision::denominator(v) != 1)
        throw std::invalid_argument("as_integer: value " + v.str() + " is not an integer");
    return boost::multiprecision::numerator(v);
}

}  // namespace qnalg
