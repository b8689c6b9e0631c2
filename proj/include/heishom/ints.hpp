#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace heishom {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace heishom
