#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace bperm {

// All counting is exact: arbitrary-precision integers for lattice counts and
// binomials, arbitrary-precision rationals for volumes and Ehrhart
// coefficients.  No floating point anywhere in the computation paths.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int k);

// Decimal rendering.  Rationals print as "p/q", or just "p" when q == 1, with
// the sign on the numerator.
std::string to_decimal(const Int& value);
std::string to_fraction(const Rational& value);

}  // namespace bperm
