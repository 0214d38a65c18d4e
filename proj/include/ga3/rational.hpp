#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ga3 {

// Arbitrary-precision exact rationals. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace ga3
