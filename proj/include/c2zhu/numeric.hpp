#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace c2zhu {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, r); zero when r is out of range.
Integer binomial(long n, long r);

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace c2zhu
