#include "transmit/bigint.h"

#include <string>

#include "transmit/errors.h"

namespace transmit {

BigInt exact_div(const BigInt& numerator, const BigInt& denominator,
                 const char* context) {
  if (denominator == 0) {
    throw ArithmeticError(std::string(context) + ": division by zero");
  }
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient,
                                   remainder);
  if (remainder != 0) {
    throw ArithmeticError(std::string(context) + ": inexact division " +
                          numerator.str() + " / " + denominator.str());
  }
  return quotient;
}

BigInt parse_decimal_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

}  // namespace transmit
