#include "transmit/cli.h"

#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "transmit/dsl.h"

namespace transmit::cli {
namespace {

using ::testing::HasSubstr;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(EvalCommandTest, TableReport) {
  const auto r = Invoke({"eval", "tree(2,2)"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("size               7\n"));
  EXPECT_THAT(r.out, HasSubstr("delta              96\n"));
  EXPECT_THAT(r.out, HasSubstr("delta0             10\n"));
  EXPECT_THAT(r.out, HasSubstr("mean_distinct      16/7 (2.28571)\n"));
}

TEST(EvalCommandTest, SingleVertexHasNoMeanDistinct) {
  const auto r = Invoke({"eval", "complete(1)", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], "1");
  EXPECT_EQ(j["delta"], "0");
  EXPECT_TRUE(j["mean_distinct"].is_null());
  EXPECT_TRUE(j["expected_messages"].is_null());
}

TEST(EvalCommandTest, HugePowerRenderedExactly) {
  const auto r = Invoke({"eval", "power(complete(2),40)", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], (BigInt(1) << 40).str());
  const auto c = power_coefficients_closed_form(2, 40);
  EXPECT_EQ(j["delta"], BigInt(2 * c.a + c.b).str());
}

TEST(EvalCommandTest, JsonShapeAndRates) {
  const auto r = Invoke({"eval", "tree(2,2)", "--rate", "2", "--time", "10",
                         "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"expr", "size", "delta", "delta0",
                                            "mean_all", "mean_distinct",
                                            "expected_messages"}));
  EXPECT_EQ(j["expected_messages"]["num"], "1920");
  EXPECT_EQ(j["expected_messages"]["den"], "1");
  EXPECT_EQ(j["mean_all"]["num"], "96");
  EXPECT_EQ(j["mean_all"]["den"], "49");
}

TEST(EvalCommandTest, RateRequiresTime) {
  EXPECT_EQ(Invoke({"eval", "star(2)", "--rate", "2"}).code, kUsage);
  EXPECT_EQ(Invoke({"eval", "star(2)", "--rate", "x", "--time", "1"}).code,
            kUsage);
}

TEST(EvalCommandTest, Csv) {
  const auto r = Invoke({"eval", "mesh(2,3)", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "expr,size,delta,delta0,mean_all,mean_distinct,expected_messages\n"
            "\"mesh(2,3)\",6,50,9,25/18,5/3,\n");
}

TEST(EvalCommandTest, ParseAndValidationErrors) {
  const auto parse_err = Invoke({"eval", "power(cycle(6), 3"});
  EXPECT_EQ(parse_err.code, kUsage);
  EXPECT_THAT(parse_err.err, HasSubstr("offset 18"));
  const auto invalid = Invoke({"eval", "cycle(2)"});
  EXPECT_EQ(invalid.code, kUsage);
  EXPECT_THAT(invalid.err, HasSubstr("cycle arity must be ≥ 3"));
  EXPECT_EQ(Invoke({"eval"}).code, kUsage);
  EXPECT_EQ(Invoke({}).code, kUsage);
  EXPECT_EQ(Invoke({"eval", "star(2)", "--format", "xml"}).code, kUsage);
}

TEST(EvalCommandTest, IntractableIsResourceError) {
  EXPECT_EQ(Invoke({"eval", "power(power(complete(9),60000),60000)"}).code,
            kResource);
}

TEST(VerifyCommandTest, Passes) {
  const auto r = Invoke({"verify", "tree(2,2)"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("PASS (96 = 96, 10 = 10, 7 = 7)"));
  const auto mesh = Invoke({"verify", "mesh(2,3)"});
  EXPECT_EQ(mesh.code, kOk);
  EXPECT_THAT(mesh.out, HasSubstr("PASS (50 = 50, 9 = 9, 6 = 6)"));
}

TEST(VerifyCommandTest, OversizeIsResourceError) {
  const auto r = Invoke({"verify", "power(complete(2),30)"});
  EXPECT_EQ(r.code, kResource);
  EXPECT_THAT(r.err, HasSubstr("1073741824"));
  EXPECT_EQ(Invoke({"verify", "path(50)", "--max-vertices", "49"}).code,
            kResource);
}

TEST(VerifyCommandTest, CorruptedFormulaIsMismatch) {
  std::ostringstream out, err;
  const Evaluator corrupted = [](const TopologyExpr& e) {
    auto t = evaluate_expr(e);
    t.delta += 2;
    return t;
  };
  EXPECT_EQ(run_verify("star(4)", kDefaultMaxVertices, out, err, corrupted),
            kMismatch);
  EXPECT_THAT(out.str(), HasSubstr("FAIL (32 != 34"));
}

TEST(CompareCommandTest, RanksByMean) {
  const auto r = Invoke({"compare", "star(6)", "cycle(7)", "tree(2,2)", "--sort",
                         "mean", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  // 72/42 < 84/42 < 96/42
  EXPECT_EQ(j[0]["expr"], "star(6)");
  EXPECT_EQ(j[1]["expr"], "cycle(7)");
  EXPECT_EQ(j[2]["expr"], "tree(2,2)");
  EXPECT_EQ(j[0]["mean_distinct"]["num"], "12");
  EXPECT_EQ(j[0]["mean_distinct"]["den"], "7");
  EXPECT_EQ(j[2]["rank"], "3");
}

TEST(CompareCommandTest, SingleAndDuplicates) {
  const auto one = Invoke({"compare", "star(3)"});
  EXPECT_EQ(one.code, kOk);
  EXPECT_THAT(one.out, HasSubstr("1     star(3)"));
  const auto dup = Invoke({"compare", "cycle(5)", "path(5)", "cycle(5)",
                           "--sort", "delta", "--format", "csv"});
  EXPECT_EQ(dup.out,
            "rank,expr,size,delta,delta0,mean_all,mean_distinct,expected_messages\n"
            "1,cycle(5),5,30,6,6/5,3/2,\n"
            "2,cycle(5),5,30,6,6/5,3/2,\n"
            "3,path(5),5,40,10,8/5,2,\n");
}

TEST(CompareCommandTest, ParseFailureNamesExpression) {
  const auto r = Invoke({"compare", "star(3)", "star(", "cycle(5)"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_THAT(r.err, HasSubstr("'star('"));
}

TEST(SeriesCommandTest, Rows) {
  const auto r = Invoke({"series", "--arity", "2", "--terms", "3", "--format", "csv"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "k,gf_coefficient,tree_delta,match\n"
            "0,8,8,yes\n1,96,96,yes\n2,736,736,yes\n");
  const auto three = Invoke({"series", "--arity", "3", "--terms", "1"});
  EXPECT_EQ(three.code, kOk);
  EXPECT_THAT(three.out, HasSubstr("18"));
}

TEST(SeriesCommandTest, ArityOneRejected) {
  const auto r = Invoke({"series", "--arity", "1", "--terms", "5"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_THAT(r.err, HasSubstr("arity must be ≥ 2"));
  EXPECT_EQ(Invoke({"series", "--arity", "2", "--terms", "0"}).code, kUsage);
}

TEST(HistCommandTest, Examples) {
  const auto star = Invoke({"hist", "star(2)", "--format", "json"});
  ASSERT_EQ(star.code, kOk);
  const auto j = nlohmann::json::parse(star.out);
  EXPECT_EQ(j["delta"], "8");
  ASSERT_EQ(j["histogram"].size(), 3u);
  EXPECT_EQ(j["histogram"][2]["distance"], "2");
  EXPECT_EQ(j["histogram"][2]["count"], "2");

  const auto k3 = Invoke({"hist", "complete(3)", "--format", "csv"});
  EXPECT_EQ(k3.out, "distance,count\n0,3\n1,6\n");

  const auto c4 = Invoke({"hist", "cycle(4)"});
  EXPECT_THAT(c4.out, HasSubstr("delta 16"));
  EXPECT_EQ(Invoke({"hist", "path(10)", "--max-vertices", "5"}).code, kResource);
}

TEST(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"hist", "mesh(20,20)", "--format", "json"};
  EXPECT_EQ(Invoke(args).out, Invoke(args).out);
}

TEST(CliTest, HelpExitsZero) {
  const auto r = Invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_THAT(r.out, HasSubstr("verify"));
}

}  // namespace
}  // namespace transmit::cli
