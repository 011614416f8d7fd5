#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace koszul {

inline constexpr const char* kVersion = "1.0.0";

// Exact rational coefficients with arbitrary precision.
using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

// Canonical rendering: "5", "-3/2" (denominator positive, gcd reduced,
// denominator 1 omitted).  cpp_rational keeps values normalized already.
std::string render_rational(const Rational& r);

// (-1)^e for possibly negative e.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// n! as an exact integer (n small).
Integer factorial(int n);

}  // namespace koszul
