#include "transmit/cli.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "transmit/builders.h"
#include "transmit/dsl.h"
#include "transmit/errors.h"

namespace transmit::cli {

namespace {

using nlohmann::ordered_json;

// Parses and validates, printing diagnostics. Returns nullopt on failure.
std::optional<TopologyExpr> load_expr(const std::string& text,
                                      std::ostream& err) {
  try {
    TopologyExpr e = parse(text);
    const auto violations = validate(e);
    if (!violations.empty()) {
      for (const auto& v : violations) {
        err << "error: invalid expression '" << text << "': " << v.node_path
            << ": " << v.message << '\n';
      }
      return std::nullopt;
    }
    return e;
  } catch (const ParseError& pe) {
    err << "error: cannot parse '" << text << "' at offset "
        << pe.byte_offset() << ": expected " << pe.expected() << ", found "
        << pe.found() << '\n';
    err << "  " << text << '\n'
        << "  " << std::string(pe.byte_offset() - 1, ' ') << "^\n";
    return std::nullopt;
  }
}

std::string rational_text(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

ordered_json rational_json(const std::optional<Rational>& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (!r) return nullptr;
  return ordered_json{{"num", numerator(*r).str()},
                      {"den", denominator(*r).str()},
                      {"display", display_decimal(*r)}};
}

std::string rational_cell(const std::optional<Rational>& r) {
  if (!r) return "-";
  const std::string exact = rational_text(*r);
  const std::string shown = display_decimal(*r);
  return exact == shown ? exact : exact + " (" + shown + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_rational(const std::optional<Rational>& r) {
  return r ? rational_text(*r) : "";
}

ordered_json report_json(const TopologyReport& r) {
  return ordered_json{{"expr", r.expression_text},
                      {"size", r.triple.size.str()},
                      {"delta", r.triple.delta.str()},
                      {"delta0", r.triple.delta0.str()},
                      {"mean_all", rational_json(r.mean_all)},
                      {"mean_distinct", rational_json(r.mean_distinct)},
                      {"expected_messages", rational_json(r.expected_messages)}};
}

constexpr const char* kReportCsvHeader =
    "expr,size,delta,delta0,mean_all,mean_distinct,expected_messages";

std::string report_csv_row(const TopologyReport& r) {
  return csv_field(r.expression_text) + "," + r.triple.size.str() + "," +
         r.triple.delta.str() + "," + r.triple.delta0.str() + "," +
         rational_text(r.mean_all) + "," + csv_rational(r.mean_distinct) +
         "," + csv_rational(r.expected_messages);
}

// Left-aligned columns padded to the widest cell.
void print_table(std::ostream& out,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

int report_resource(const ResourceError& e, std::ostream& err) {
  err << "error: resource cap exceeded: " << e.what();
  if (e.estimated_size() > 0) {
    err << " (estimated size " << e.estimated_size().str() << ")";
  }
  err << '\n';
  return kResource;
}

}  // namespace

int run_eval(const std::string& expr_text, Format format,
             const std::optional<std::string>& rate,
             const std::optional<std::string>& time, std::ostream& out,
             std::ostream& err) {
  const auto e = load_expr(expr_text, err);
  if (!e) return kUsage;
  std::optional<Rational> rate_value;
  std::optional<Rational> time_value;
  try {
    if (rate) rate_value = parse_decimal(*rate);
    if (time) time_value = parse_decimal(*time);
  } catch (const ValidationError& ve) {
    err << "error: " << ve.what() << '\n';
    return kUsage;
  }
  TopologyReport report;
  try {
    report = summarize(expr_text, evaluate_expr(*e), rate_value, time_value);
  } catch (const ResourceError& re) {
    return report_resource(re, err);
  }

  switch (format) {
    case Format::kJson:
      out << report_json(report).dump(2) << '\n';
      break;
    case Format::kCsv:
      out << kReportCsvHeader << '\n' << report_csv_row(report) << '\n';
      break;
    case Format::kTable:
      print_table(out, {
          {"expr", report.expression_text},
          {"size", report.triple.size.str()},
          {"delta", report.triple.delta.str()},
          {"delta0", report.triple.delta0.str()},
          {"mean_all", rational_cell(report.mean_all)},
          {"mean_distinct", rational_cell(report.mean_distinct)},
          {"expected_messages", rational_cell(report.expected_messages)},
      });
      break;
  }
  return kOk;
}

int run_verify(const std::string& expr_text, std::size_t max_vertices,
               std::ostream& out, std::ostream& err,
               const Evaluator& evaluator) {
  const auto e = load_expr(expr_text, err);
  if (!e) return kUsage;

  TransmissionTriple oracle;
  try {
    const BigInt size = estimated_size(*e);
    if (size > max_vertices) {
      throw ResourceError("expression '" + expr_text + "' needs " +
                              size.str() + " vertices, over --max-vertices " +
                              std::to_string(max_vertices),
                          size);
    }
    const RootedGraph g = build_expr(*e, max_vertices);
    const OracleLimits limits{max_vertices, 0};
    oracle = {BigInt(g.vertex_count()), graph_transmission(g, limits),
              root_transmission(g, limits)};
  } catch (const ResourceError& re) {
    return report_resource(re, err);
  }
  TransmissionTriple formula;
  try {
    formula = evaluator(*e);
  } catch (const ArithmeticError& ae) {
    err << "error: closed form failed: " << ae.what() << '\n';
    return kMismatch;
  }

  print_table(out, {
      {"expr", expr_text},
      {"", "oracle", "closed-form"},
      {"size", oracle.size.str(), formula.size.str()},
      {"delta", oracle.delta.str(), formula.delta.str()},
      {"delta0", oracle.delta0.str(), formula.delta0.str()},
  });
  const bool ok = oracle == formula;
  auto cmp = [](const BigInt& a, const BigInt& b) {
    return a.str() + (a == b ? " = " : " != ") + b.str();
  };
  out << (ok ? "PASS" : "FAIL") << " (" << cmp(oracle.delta, formula.delta)
      << ", " << cmp(oracle.delta0, formula.delta0) << ", "
      << cmp(oracle.size, formula.size) << ")\n";
  return ok ? kOk : kMismatch;
}

int run_compare(const std::vector<std::string>& expr_texts, RankKey key,
                Format format, std::ostream& out, std::ostream& err) {
  if (expr_texts.empty()) {
    err << "error: compare needs at least one expression\n";
    return kUsage;
  }
  std::vector<TopologyReport> reports;
  for (const auto& text : expr_texts) {
    const auto e = load_expr(text, err);
    if (!e) {
      err << "error: aborting compare at expression '" << text << "'\n";
      return kUsage;
    }
    try {
      reports.push_back(summarize(text, evaluate_expr(*e)));
    } catch (const ResourceError& re) {
      return report_resource(re, err);
    }
  }
  const auto ranked = compare_rank(std::move(reports), key);

  switch (format) {
    case Format::kJson: {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < ranked.size(); ++i) {
        ordered_json row = {{"rank", std::to_string(i + 1)}};
        row.update(report_json(ranked[i]));
        rows.push_back(std::move(row));
      }
      out << rows.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "rank," << kReportCsvHeader << '\n';
      for (std::size_t i = 0; i < ranked.size(); ++i) {
        out << i + 1 << ',' << report_csv_row(ranked[i]) << '\n';
      }
      break;
    case Format::kTable: {
      std::vector<std::vector<std::string>> rows = {
          {"rank", "expr", "size", "delta", "delta0", "mean_distinct"}};
      for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& r = ranked[i];
        rows.push_back({std::to_string(i + 1), r.expression_text,
                        r.triple.size.str(), r.triple.delta.str(),
                        r.triple.delta0.str(), rational_cell(r.mean_distinct)});
      }
      print_table(out, rows);
      break;
    }
  }
  return kOk;
}

int run_series(const std::string& arity_text, const std::string& terms_text,
               Format format, std::ostream& out, std::ostream& err) {
  auto is_int = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
  };
  if (!is_int(arity_text) || !is_int(terms_text)) {
    err << "error: --arity and --terms take nonnegative integers\n";
    return kUsage;
  }
  const BigInt arity = parse_decimal_digits(arity_text);
  const BigInt terms = parse_decimal_digits(terms_text);
  if (arity < 2) {
    err << "error: arity must be ≥ 2\n";
    return kUsage;
  }
  if (terms < 1) {
    err << "error: terms must be ≥ 1\n";
    return kUsage;
  }
  // The last term is δ(T^terms), roughly 2·terms·log2(arity) bits.
  const double bits =
      (terms.convert_to<double>() + 1.0) *
      static_cast<double>(boost::multiprecision::msb(arity) + 1);
  if (terms > kMaxExponent || bits > kMaxSizeBits) {
    err << "error: resource cap exceeded: series terms would exceed 2^"
        << static_cast<long long>(kMaxSizeBits) << " vertices\n";
    return kResource;
  }
  const auto count = terms.convert_to<std::size_t>();
  const SeriesTerms series = gf_series(arity, count);

  struct Row {
    std::size_t k;
    BigInt gf;
    BigInt tree;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (std::size_t k = 0; k < count; ++k) {
    BigInt tree = tree_triple(arity, k + 1).delta;
    all_match = all_match && tree == series.terms[k];
    rows.push_back({k, series.terms[k], std::move(tree)});
  }

  switch (format) {
    case Format::kJson: {
      ordered_json j = {{"arity", arity.str()},
                        {"terms", ordered_json::array()}};
      for (const auto& r : rows) {
        j["terms"].push_back({{"k", std::to_string(r.k)},
                              {"gf_coefficient", r.gf.str()},
                              {"tree_delta", r.tree.str()},
                              {"match", r.gf == r.tree}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "k,gf_coefficient,tree_delta,match\n";
      for (const auto& r : rows) {
        out << r.k << ',' << r.gf.str() << ',' << r.tree.str() << ','
            << (r.gf == r.tree ? "yes" : "no") << '\n';
      }
      break;
    case Format::kTable: {
      std::vector<std::vector<std::string>> table = {
          {"k", "gf_coefficient", "tree_delta(k+1)", "match"}};
      for (const auto& r : rows) {
        table.push_back({std::to_string(r.k), r.gf.str(), r.tree.str(),
                         r.gf == r.tree ? "yes" : "no"});
      }
      print_table(out, table);
      break;
    }
  }
  if (!all_match) {
    err << "error: generating-function coefficients disagree with the tree "
           "recurrence\n";
    return kMismatch;
  }
  return kOk;
}

int run_hist(const std::string& expr_text, std::size_t max_vertices,
             Format format, std::ostream& out, std::ostream& err) {
  const auto e = load_expr(expr_text, err);
  if (!e) return kUsage;
  DistanceHistogram hist;
  std::size_t size = 0;
  try {
    const RootedGraph g = build_expr(*e, max_vertices);
    size = g.vertex_count();
    hist = distance_histogram(g, OracleLimits{max_vertices, 0});
  } catch (const ResourceError& re) {
    return report_resource(re, err);
  }
  const BigInt delta = hist.weighted_sum();

  switch (format) {
    case Format::kJson: {
      ordered_json j = {{"expr", expr_text},
                        {"size", std::to_string(size)},
                        {"histogram", ordered_json::array()},
                        {"delta", delta.str()}};
      for (const auto& [d, c] : hist.counts) {
        j["histogram"].push_back(
            {{"distance", std::to_string(d)}, {"count", std::to_string(c)}});
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "distance,count\n";
      for (const auto& [d, c] : hist.counts) out << d << ',' << c << '\n';
      break;
    case Format::kTable: {
      std::vector<std::vector<std::string>> table = {{"distance", "pairs"}};
      for (const auto& [d, c] : hist.counts) {
        table.push_back({std::to_string(d), std::to_string(c)});
      }
      print_table(out, table);
      out << "delta " << delta.str() << '\n';
      break;
    }
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact transmission (total hop distance) of composed network "
               "topologies",
               "transmit"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats = {
      {"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  const std::map<std::string, RankKey> sort_keys = {
      {"mean", RankKey::kMeanDistinct},
      {"delta", RankKey::kDelta},
      {"size", RankKey::kSize}};

  Format format = Format::kTable;
  RankKey sort_key = RankKey::kMeanDistinct;
  std::size_t max_vertices = kDefaultMaxVertices;
  std::string expr_text;
  std::vector<std::string> expr_texts;
  std::string rate;
  std::string time;
  std::string arity;
  std::string terms;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", max_vertices,
                    "Vertex cap for the brute-force oracle")
        ->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "Closed-form triple and indicators");
  eval->add_option("expr", expr_text, "Topology expression")->required();
  auto* rate_opt = eval->add_option("--rate", rate, "Messages per pair per unit time");
  auto* time_opt = eval->add_option("--time", time, "Observation time");
  rate_opt->needs(time_opt);
  time_opt->needs(rate_opt);
  add_format(eval);

  auto* verify = app.add_subcommand("verify", "Compare closed forms to BFS");
  verify->add_option("expr", expr_text, "Topology expression")->required();
  add_cap(verify);

  auto* compare = app.add_subcommand("compare", "Rank topologies");
  compare->add_option("exprs", expr_texts, "Topology expressions")->required();
  compare->add_option("--sort", sort_key, "Ranking key")
      ->transform(CLI::CheckedTransformer(sort_keys, CLI::ignore_case));
  add_format(compare);

  auto* series = app.add_subcommand("series", "Generating-function self-test");
  series->add_option("--arity", arity, "Tree arity")->required();
  series->add_option("--terms", terms, "Number of coefficients")->required();
  add_format(series);

  auto* hist = app.add_subcommand("hist", "Distance histogram via BFS");
  hist->add_option("expr", expr_text, "Topology expression")->required();
  add_cap(hist);
  add_format(hist);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << '\n';
    return kUsage;
  }

  try {
    if (*eval) {
      return run_eval(expr_text, format,
                    rate_opt->count() ? std::optional(rate) : std::nullopt,
                      time_opt->count() ? std::optional(time) : std::nullopt,
                      out, err);
    }
    if (*verify) return run_verify(expr_text, max_vertices, out, err);
    if (*compare) return run_compare(expr_texts, sort_key, format, out, err);
    if (*series) return run_series(arity, terms, format, out, err);
    if (*hist) return run_hist(expr_text, max_vertices, format, out, err);
  } catch (const ResourceError& re) {
    return report_resource(re, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace transmit::cli
