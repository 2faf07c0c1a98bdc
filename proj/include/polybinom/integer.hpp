#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polybinom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Generalized binomial coefficient a(a-1)...(a-k+1)/k!, a polynomial in a.
// Zero for k < 0, and zero for 0 <= a < k.
Integer binomial(const Integer& a, std::int64_t k);

Integer factorial(std::int64_t k);

std::string to_string(const Integer& value);

// "(x0, x1, ...)"
std::string format_vector(const std::vector<Integer>& values);

}  // namespace polybinom
