#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace autoplex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(std::uint64_t k) { return BigInt(1) << k; }

inline std::string to_decimal_string(const BigInt& v) { return v.str(); }

// Fixed-point rendering, truncated toward zero.
std::string to_decimal_string(const Rational& v, unsigned digits);

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace autoplex
