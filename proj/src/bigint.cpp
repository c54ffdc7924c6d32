#include "autoplex/bigint.hpp"

namespace autoplex {

std::string to_decimal_string(const Rational& v, unsigned digits) {
  BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const BigInt scaled = (num * scale) / den;
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + std::string(digits - frac.size(), '0') + frac;
  return out;
}

}  // namespace autoplex
