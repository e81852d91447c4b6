#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace transmit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Returns numerator / denominator, throwing ArithmeticError when the remainder
// is nonzero. `context` names the formula for the diagnostic.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator,
                 const char* context);

// base^exponent for a nonnegative exponent.
BigInt ipow(const BigInt& base, std::uint64_t exponent);

// Decimal digits only; leading zeros are decimal, never an octal prefix.
BigInt parse_decimal_digits(std::string_view digits);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace transmit
