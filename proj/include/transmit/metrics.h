#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transmit/bigint.h"
#include "transmit/closed_forms.h"

namespace transmit {

struct TopologyReport {
  std::string expression_text;
  TransmissionTriple triple;
  Rational mean_all;                        // δ / |G|²
  std::optional<Rational> mean_distinct;    // δ / (|G|(|G|-1)), |G| ≥ 2 only
  std::optional<Rational> expected_messages;  // rate · time · δ
};

// Expected messages are filled only when both rate and time are given.
TopologyReport summarize(std::string expression_text,
                         const TransmissionTriple& t,
                         const std::optional<Rational>& rate = std::nullopt,
                         const std::optional<Rational>& time = std::nullopt);

enum class RankKey { kMeanDistinct, kDelta, kSize };

// Stable ascending sort by exact key. A single-vertex topology has no distinct
// pairs and ranks as mean distance 0. Throws ValidationError on empty input.
std::vector<TopologyReport> compare_rank(std::vector<TopologyReport> reports,
                                         RankKey key);

// Parses a nonnegative decimal ("2", "0.25", "1e-3", "3.") into an exact
// rational. Throws ValidationError on anything else.
Rational parse_decimal(std::string_view text);

// Six significant digits, %g style. Display only.
std::string display_decimal(const Rational& value);

}  // namespace transmit
