#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "transmit/closed_forms.h"
#include "transmit/metrics.h"
#include "transmit/rooted_graph.h"
#include "transmit/topology_expr.h"

namespace transmit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMismatch = 2,
  kResource = 3,
};

enum class Format { kTable, kJson, kCsv };

// Closed-form engine used by `verify`; replaceable so tests can inject a
// deliberately wrong formula.
using Evaluator = std::function<TransmissionTriple(const TopologyExpr&)>;

int run_eval(const std::string& expr_text, Format format,
             const std::optional<std::string>& rate,
             const std::optional<std::string>& time, std::ostream& out,
             std::ostream& err);

int run_verify(const std::string& expr_text, std::size_t max_vertices,
               std::ostream& out, std::ostream& err,
               const Evaluator& evaluator = evaluate_expr);

int run_compare(const std::vector<std::string>& expr_texts, RankKey key,
                Format format, std::ostream& out, std::ostream& err);

int run_series(const std::string& arity, const std::string& terms,
               Format format, std::ostream& out, std::ostream& err);

int run_hist(const std::string& expr_text, std::size_t max_vertices,
             Format format, std::ostream& out, std::ostream& err);

// Full command line, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace transmit::cli
