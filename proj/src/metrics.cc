#include "transmit/metrics.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

#include "transmit/errors.h"

namespace transmit {

TopologyReport summarize(std::string expression_text,
                         const TransmissionTriple& t,
                         const std::optional<Rational>& rate,
                         const std::optional<Rational>& time) {
  TopologyReport report;
  report.expression_text = std::move(expression_text);
  report.triple = t;
  report.mean_all = Rational(t.delta, t.size * t.size);
  if (t.size >= 2) {
    report.mean_distinct = Rational(t.delta, t.size * (t.size - 1));
  }
  if (rate && time) {
    report.expected_messages = *rate * *time * Rational(t.delta);
  }
  return report;
}

std::vector<TopologyReport> compare_rank(std::vector<TopologyReport> reports,
                                         RankKey key) {
  if (reports.empty()) throw ValidationError("nothing to compare");
  auto mean = [](const TopologyReport& r) {
    return r.mean_distinct.value_or(Rational(0));
  };
  std::stable_sort(reports.begin(), reports.end(),
                   [&](const TopologyReport& x, const TopologyReport& y) {
                     switch (key) {
                       case RankKey::kMeanDistinct:
                         return mean(x) < mean(y);
                       case RankKey::kDelta:
                         return x.triple.delta < y.triple.delta;
                       case RankKey::kSize:
                         return x.triple.size < y.triple.size;
                     }
                     return false;
                   });
  return reports;
}

Rational parse_decimal(std::string_view text) {
  auto bad = [&]() -> ValidationError {
    return ValidationError("not a nonnegative decimal: '" + std::string(text) +
                           "'");
  };
  std::size_t pos = 0;
  std::string digits;
  std::size_t fraction_digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits += text[pos++];
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos++];
      ++fraction_digits;
    }
  }
  if (digits.empty()) throw bad();
  long long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || exponent > 4096 || exponent < -4096) {
      throw bad();
    }
    pos = text.size();
  }
  if (pos != text.size()) throw bad();

  const long long scale = exponent - static_cast<long long>(fraction_digits);
  const Rational value{parse_decimal_digits(digits)};
  const BigInt ten_power = ipow(10, static_cast<std::uint64_t>(scale < 0 ? -scale : scale));
  return scale < 0 ? value / Rational(ten_power) : value * Rational(ten_power);
}

std::string display_decimal(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (value == 0) return "0";
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;

  // Decimal exponent e with 10^e ≤ magnitude < 10^(e+1).
  const BigInt num = numerator(magnitude);
  const BigInt den = denominator(magnitude);
  long long e = static_cast<long long>(num.str().size()) -
                static_cast<long long>(den.str().size());
  auto ten = [](long long p) { return ipow(10, static_cast<std::uint64_t>(p)); };
  auto at_least_power = [&](long long p) {
    return p >= 0 ? num >= den * ten(p) : num * ten(-p) >= den;
  };
  while (!at_least_power(e)) --e;
  while (at_least_power(e + 1)) ++e;

  // Round magnitude · 10^(5 - e) half-up to six digits.
  constexpr long long kDigits = 6;
  const long long shift = kDigits - 1 - e;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0) {
    scaled_num *= ten(shift);
  } else {
    scaled_den *= ten(-shift);
  }
  BigInt mantissa = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  if (mantissa >= ten(kDigits)) {
    mantissa /= 10;
    ++e;
  }
  std::string d = mantissa.str();  // exactly six digits

  std::string out = negative ? "-" : "";
  if (e < -4 || e >= kDigits) {
    std::string frac = d.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += d.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += e < 0 ? "e-" : "e+";
    const std::string exp = std::to_string(e < 0 ? -e : e);
    out += (exp.size() < 2 ? "0" : "") + exp;
    return out;
  }
  std::string int_part;
  std::string frac_part;
  if (e >= 0) {
    int_part = d.substr(0, static_cast<std::size_t>(e + 1));
    frac_part = d.substr(static_cast<std::size_t>(e + 1));
  } else {
    int_part = "0";
    frac_part = std::string(static_cast<std::size_t>(-e - 1), '0') + d;
  }
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  out += int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  return out;
}

}  // namespace transmit
