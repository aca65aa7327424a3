#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace harmon {

/** Arbitrary-precision rational used wherever a quantity is exact by
    construction (exponent pairs, eigenvalue formulas, polynomial recursions).
    Numerators and denominators grow quickly in the recursions, so a fixed-width
    fraction type is not an option. */
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace harmon
