#include "transmit/dsl.h"

#include <random>

#include "gtest/gtest.h"
#include "support/random_expr.h"
#include "transmit/closed_forms.h"
#include "transmit/errors.h"

namespace transmit {
namespace {

using E = TopologyExpr;

TEST(ParseTest, Primitives) {
  EXPECT_EQ(parse("tree(2,3)"), E::tree(2, 3));
  EXPECT_EQ(parse("complete(4)"), E::complete(4));
  EXPECT_EQ(parse("mesh(2, 3, 4)"), E::mesh({2, 3, 4}));
  EXPECT_EQ(parse("  star ( 7 ) "), E::star(7));
}

TEST(ParseTest, Combinators) {
  EXPECT_EQ(parse("wedge(complete(2), complete(2))"),
            E::wedge({E::complete(2), E::complete(2)}));
  EXPECT_EQ(parse("rprod(path(3),cycle(4))"),
            E::rooted_product(E::path(3), E::cycle(4)));
  EXPECT_EQ(parse("power(attach(star(2)), 3)"),
            E::power(E::attach(E::star(2)), 3));
}

TEST(ParseTest, IntegersAreArbitraryPrecision) {
  EXPECT_EQ(parse("complete(123456789012345678901234567890)").params[0],
            BigInt("123456789012345678901234567890"));
}

TEST(ParseTest, LeadingZerosAreDecimal) {
  EXPECT_EQ(parse("complete(010)"), E::complete(10));
  EXPECT_EQ(parse("tree(2, 00)"), E::tree(2, 0));
}

TEST(ParseTest, UnbalancedParenthesis) {
  try {
    parse("power(cycle(6), 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.byte_offset(), 18u);
    EXPECT_EQ(e.expected(), "\")\"");
    EXPECT_EQ(e.found(), "end of input");
  }
}

TEST(ParseTest, ErrorPositions) {
  auto offset = [](std::string_view text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.byte_offset();
    }
    return 0;
  };
  EXPECT_EQ(offset(""), 1u);
  EXPECT_EQ(offset("cube(3)"), 1u);
  EXPECT_EQ(offset("tree(2)"), 7u);
  EXPECT_EQ(offset("star(3) x"), 9u);
  EXPECT_EQ(offset("star(-3)"), 6u);
  EXPECT_EQ(offset("wedge()"), 7u);
  EXPECT_EQ(offset("rprod(star(1))"), 14u);
  EXPECT_EQ(offset("power(star(1), path(2))"), 16u);
  EXPECT_EQ(offset("Star(3)"), 1u);
}

TEST(ParseTest, FoundDescribesToken) {
  try {
    parse("wedge(star(1), banana(2))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.found(), "'banana'");
    EXPECT_EQ(e.byte_offset(), 16u);
  }
}

TEST(ValidateTest, Examples) {
  const auto cycle = validate(E::cycle(2));
  ASSERT_EQ(cycle.size(), 1u);
  EXPECT_EQ(cycle[0].message, "cycle arity must be ≥ 3");
  EXPECT_TRUE(validate(E::tree(1, 5)).empty());
  const auto power = validate(E::power(E::complete(3), 0));
  ASSERT_EQ(power.size(), 1u);
  EXPECT_EQ(power[0].message, "exponent must be ≥ 1");
}

TEST(ValidateTest, ReportsEveryViolationWithPath) {
  const auto v = validate(E::wedge(
      {E::star(1), E::power(E::cycle(1), 0), E::mesh({2, 0})}));
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].node_path, "wedge[1].power");
  EXPECT_EQ(v[1].node_path, "wedge[1].power.base");
  EXPECT_EQ(v[2].node_path, "wedge[2].mesh");
  EXPECT_THROW(require_valid(E::complete(0)), ValidationError);
}

TEST(ValidateTest, EmptyCombinatorsAndLimits) {
  EXPECT_FALSE(validate(E::wedge({})).empty());
  EXPECT_FALSE(validate(E::mesh({})).empty());
  EXPECT_FALSE(validate(E::power(E::complete(2), kMaxExponent + 1)).empty());
  EXPECT_FALSE(validate(E::tree(2, kMaxExponent + 1)).empty());
}

TEST(EstimatedSizeTest, Examples) {
  EXPECT_EQ(estimated_size(E::tree(2, 3)), 15);
  EXPECT_EQ(estimated_size(E::power(E::complete(2), 10)), 1024);
  EXPECT_EQ(estimated_size(E::wedge({E::star(3), E::star(3)})), 7);
  EXPECT_EQ(estimated_size(E::tree(1, 9)), 10);
  EXPECT_EQ(estimated_size(E::attach(E::mesh({2, 3}))), 7);
}

TEST(EstimatedSizeTest, Log2BoundIsAnUpperBound) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto e = testing::random_expr(rng, 4, 1'000'000);
    const auto size = estimated_size(e);
    EXPECT_LE(static_cast<double>(boost::multiprecision::msb(size)),
              size_log2_bound(e));
  }
}

TEST(RenderTest, Canonical) {
  EXPECT_EQ(render(E::power(E::cycle(6), 3)), "power(cycle(6), 3)");
  EXPECT_EQ(render(E::mesh({2, 3})), "mesh(2, 3)");
}

TEST(RenderTest, RoundTripsRandomExpressions) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto e = testing::random_expr(rng, 4, 1'000'000);
    EXPECT_EQ(parse(render(e)), e);
  }
}

}  // namespace
}  // namespace transmit
