#include "transmit/metrics.h"

#include "gtest/gtest.h"
#include "transmit/errors.h"

namespace transmit {
namespace {

TEST(SummarizeTest, CompleteGraphHasUnitMeanDistinct) {
  for (int n = 2; n <= 9; ++n) {
    EXPECT_EQ(summarize("k", complete_triple(n)).mean_distinct, Rational(1));
  }
}

TEST(SummarizeTest, Star) {
  const auto r = summarize("star(3)", star_triple(3));
  EXPECT_EQ(r.mean_all, Rational(18, 16));
  EXPECT_EQ(r.mean_distinct, Rational(3, 2));
  EXPECT_FALSE(r.expected_messages);
}

TEST(SummarizeTest, ExpectedMessages) {
  const auto r = summarize("tree(2,2)", tree_triple(2, 2), Rational(2), Rational(10));
  EXPECT_EQ(r.expected_messages, Rational(1920));
  EXPECT_FALSE(summarize("x", tree_triple(2, 2), Rational(2)).expected_messages);
}

TEST(SummarizeTest, SingleVertex) {
  const auto r = summarize("complete(1)", complete_triple(1));
  EXPECT_EQ(r.mean_all, Rational(0));
  EXPECT_FALSE(r.mean_distinct);
}

TEST(SummarizeTest, MeanInvariants) {
  for (int n = 3; n <= 30; ++n) {
    const auto t = cycle_triple(n);
    const auto r = summarize("c", t);
    EXPECT_EQ(*r.mean_distinct * Rational(t.size * (t.size - 1)), Rational(t.delta));
    EXPECT_GE(*r.mean_distinct, 1);
    EXPECT_LT(r.mean_all, *r.mean_distinct);
  }
}

TEST(CompareRankTest, ByMeanDistinct) {
  const auto ranked = compare_rank(
      {summarize("star(3)", star_triple(3)), summarize("complete(4)", complete_triple(4))},
      RankKey::kMeanDistinct);
  EXPECT_EQ(ranked[0].expression_text, "complete(4)");
  EXPECT_EQ(ranked[1].expression_text, "star(3)");
}

TEST(CompareRankTest, ByDeltaAndStability) {
  const auto ranked = compare_rank(
      {summarize("path(5)", path_triple(5)), summarize("cycle(5)", cycle_triple(5)),
       summarize("cycle(5)#2", cycle_triple(5))},
      RankKey::kDelta);
  EXPECT_EQ(ranked[0].expression_text, "cycle(5)");
  EXPECT_EQ(ranked[1].expression_text, "cycle(5)#2");
  EXPECT_EQ(ranked[2].triple.delta, 40);
}

TEST(CompareRankTest, SingleAndEmpty) {
  const auto one = compare_rank({summarize("a", star_triple(2))}, RankKey::kSize);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_THROW(compare_rank({}, RankKey::kSize), ValidationError);
}

TEST(ParseDecimalTest, Accepts) {
  EXPECT_EQ(parse_decimal("2"), Rational(2));
  EXPECT_EQ(parse_decimal("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_decimal("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_decimal("1.5E+2"), Rational(150));
  EXPECT_EQ(parse_decimal(".5"), Rational(1, 2));
  EXPECT_EQ(parse_decimal("3."), Rational(3));
  EXPECT_EQ(parse_decimal("010.50"), Rational(21, 2));
}

TEST(ParseDecimalTest, Rejects) {
  for (const char* bad : {"", "-1", "abc", "1.2.3", "1e", "1/2", "."}) {
    EXPECT_THROW(parse_decimal(bad), ValidationError) << bad;
  }
}

TEST(DisplayDecimalTest, SixSignificantDigits) {
  EXPECT_EQ(display_decimal(Rational(3, 2)), "1.5");
  EXPECT_EQ(display_decimal(Rational(1, 3)), "0.333333");
  EXPECT_EQ(display_decimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(display_decimal(Rational(96, 49)), "1.95918");
  EXPECT_EQ(display_decimal(Rational(0)), "0");
  EXPECT_EQ(display_decimal(Rational(1920)), "1920");
  EXPECT_EQ(display_decimal(Rational(123456789)), "1.23457e+08");
  EXPECT_EQ(display_decimal(Rational(1, 100000)), "1e-05");
  EXPECT_EQ(display_decimal(Rational(9999995, 10)), "1e+06");
  EXPECT_EQ(display_decimal(Rational(1, 10000)), "0.0001");
}

}  // namespace
}  // namespace transmit
