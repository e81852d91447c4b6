#include "transmit/dsl.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <utility>

#include "transmit/errors.h"

namespace transmit {

ParseError::ParseError(std::size_t byte_offset, std::string expected,
                       std::string found)
    : std::runtime_error("at offset " + std::to_string(byte_offset) +
                         ": expected " + expected + ", found " + found),
      byte_offset_(byte_offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

constexpr ExprKind kAllKinds[] = {
    ExprKind::kComplete, ExprKind::kCycle, ExprKind::kStar,
    ExprKind::kPath,     ExprKind::kMesh,  ExprKind::kTree,
    ExprKind::kWedge,    ExprKind::kRootedProduct, ExprKind::kPower,
    ExprKind::kAttach,
};

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) {}

  TopologyExpr parse_all() {
    TopologyExpr e = parse_expr();
    skip_space();
    if (pos_ != input_.size()) fail("end of input");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
  }

  std::string describe_here() const {
    if (pos_ >= input_.size()) return "end of input";
    const char c = input_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < input_.size() &&
             std::isalnum(static_cast<unsigned char>(input_[end]))) {
        ++end;
      }
      return "'" + std::string(input_.substr(pos_, end - pos_)) + "'";
    }
    return "'" + std::string(1, c) + "'";
  }

  [[noreturn]] void fail(std::string expected) const {
    throw ParseError(pos_ + 1, std::move(expected), describe_here());
  }

  void expect(char c) {
    skip_space();
    if (pos_ < input_.size() && input_[pos_] == c) {
      ++pos_;
      return;
    }
    fail("\"" + std::string(1, c) + "\"");
  }

  // Consumes `c` if it is the next token.
  bool accept(char c) {
    skip_space();
    if (pos_ < input_.size() && input_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigInt parse_int() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < input_.size() &&
           std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("integer");
    return parse_decimal_digits(input_.substr(start, pos_ - start));
  }

  ExprKind parse_keyword() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < input_.size() &&
           std::isalpha(static_cast<unsigned char>(input_[end]))) {
      ++end;
    }
    const std::string_view word = input_.substr(start, end - start);
    for (const ExprKind kind : kAllKinds) {
      if (word == keyword(kind)) {
        pos_ = end;
        return kind;
      }
    }
    fail("topology keyword");
  }

  TopologyExpr parse_expr() {
    TopologyExpr e;
    e.kind = parse_keyword();
    expect('(');
    switch (e.kind) {
      case ExprKind::kComplete:
      case ExprKind::kCycle:
      case ExprKind::kStar:
      case ExprKind::kPath:
        e.params.push_back(parse_int());
        break;
      case ExprKind::kMesh:
        e.params.push_back(parse_int());
        while (accept(',')) e.params.push_back(parse_int());
        break;
      case ExprKind::kTree:
        e.params.push_back(parse_int());
        expect(',');
        e.params.push_back(parse_int());
        break;
      case ExprKind::kWedge:
        e.children.push_back(parse_expr());
        while (accept(',')) e.children.push_back(parse_expr());
        break;
      case ExprKind::kRootedProduct:
        e.children.push_back(parse_expr());
        expect(',');
        e.children.push_back(parse_expr());
        break;
      case ExprKind::kPower:
        e.children.push_back(parse_expr());
        expect(',');
        e.params.push_back(parse_int());
        break;
      case ExprKind::kAttach:
        e.children.push_back(parse_expr());
        break;
    }
    expect(')');
    return e;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

struct Validator {
  std::vector<Violation> out;

  void add(const std::string& path, std::string message) {
    out.push_back({path, std::move(message)});
  }

  void at_least(const std::string& path, const BigInt& value, int minimum,
                const std::string& what) {
    if (value < minimum) {
      add(path, what + " must be ≥ " + std::to_string(minimum));
    }
  }

  void at_most(const std::string& path, const BigInt& value,
               std::uint64_t maximum, const std::string& what) {
    if (value > maximum) {
      add(path, what + " must be ≤ " + std::to_string(maximum));
    }
  }

  void visit(const TopologyExpr& e, const std::string& path) {
    const std::string kw(keyword(e.kind));
    switch (e.kind) {
      case ExprKind::kComplete:
        at_least(path, e.params.at(0), 1, "complete arity");
        break;
      case ExprKind::kCycle:
        at_least(path, e.params.at(0), 3, "cycle arity");
        break;
      case ExprKind::kStar:
        at_least(path, e.params.at(0), 1, "star leaf count");
        break;
      case ExprKind::kPath:
        at_least(path, e.params.at(0), 1, "path length");
        break;
      case ExprKind::kMesh:
        if (e.params.empty()) add(path, "mesh needs at least one dimension");
        for (std::size_t i = 0; i < e.params.size(); ++i) {
          at_least(path, e.params[i], 1,
                   "mesh dimension " + std::to_string(i + 1));
        }
        break;
      case ExprKind::kTree:
        at_least(path, e.params.at(0), 1, "tree arity");
        at_least(path, e.params.at(1), 0, "tree depth");
        at_most(path, e.params.at(1), kMaxExponent, "tree depth");
        break;
      case ExprKind::kWedge:
        if (e.children.empty()) add(path, "wedge needs at least one part");
        for (std::size_t i = 0; i < e.children.size(); ++i) {
          visit(e.children[i], path + "[" + std::to_string(i) + "]." +
                                   std::string(keyword(e.children[i].kind)));
        }
        return;
      case ExprKind::kRootedProduct:
        visit(e.children.at(0), path + ".left");
        visit(e.children.at(1), path + ".right");
        return;
      case ExprKind::kPower:
        at_least(path, e.params.at(0), 1, "exponent");
        at_most(path, e.params.at(0), kMaxExponent, "exponent");
        visit(e.children.at(0), path + ".base");
        return;
      case ExprKind::kAttach:
        visit(e.children.at(0), path + ".child");
        return;
    }
  }
};

double log2_of(const BigInt& value) {
  if (value <= 0) return 0.0;
  const std::size_t msb = boost::multiprecision::msb(value);
  // Top bit position is within 1 of log2; add 1 for an upper bound.
  return static_cast<double>(msb) + 1.0;
}

double as_double(const BigInt& value) { return value.convert_to<double>(); }

}  // namespace

TopologyExpr parse(std::string_view input) { return Parser(input).parse_all(); }

std::vector<Violation> validate(const TopologyExpr& e) {
  Validator v;
  v.visit(e, std::string(keyword(e.kind)));
  return std::move(v.out);
}

void require_valid(const TopologyExpr& e) {
  const auto violations = validate(e);
  if (violations.empty()) return;
  std::string message;
  for (const auto& v : violations) {
    if (!message.empty()) message += "; ";
    message += v.node_path + ": " + v.message;
  }
  throw ValidationError(message);
}

double size_log2_bound(const TopologyExpr& e) {
  switch (e.kind) {
    case ExprKind::kComplete:
    case ExprKind::kCycle:
    case ExprKind::kPath:
      return log2_of(e.params[0]);
    case ExprKind::kStar:
      return log2_of(e.params[0]) + 1.0;
    case ExprKind::kMesh: {
      double bits = 0.0;
      for (const auto& r : e.params) bits += log2_of(r);
      return bits;
    }
    case ExprKind::kTree:
      return (as_double(e.params[1]) + 1.0) * log2_of(e.params[0]);
    case ExprKind::kWedge: {
      double bits = 0.0;
      for (const auto& c : e.children) bits = std::max(bits, size_log2_bound(c));
      return bits + std::log2(static_cast<double>(e.children.size())) + 1.0;
    }
    case ExprKind::kRootedProduct:
      return size_log2_bound(e.children[0]) + size_log2_bound(e.children[1]);
    case ExprKind::kPower:
      return as_double(e.params[0]) * size_log2_bound(e.children[0]);
    case ExprKind::kAttach:
      return size_log2_bound(e.children[0]) + 1.0;
  }
  return 0.0;
}

void require_tractable(const TopologyExpr& e) {
  const double bits = size_log2_bound(e);
  if (bits > kMaxSizeBits) {
    throw ResourceError("expression size exceeds 2^" +
                            std::to_string(static_cast<long long>(kMaxSizeBits)) +
                            " vertices; exact evaluation refused",
                        BigInt(0));
  }
}

namespace {

BigInt exact_size(const TopologyExpr& e) {
  switch (e.kind) {
    case ExprKind::kComplete:
    case ExprKind::kCycle:
    case ExprKind::kPath:
      return e.params[0];
    case ExprKind::kStar:
      return e.params[0] + 1;
    case ExprKind::kMesh: {
      BigInt size = 1;
      for (const auto& r : e.params) size *= r;
      return size;
    }
    case ExprKind::kTree: {
      const BigInt& arity = e.params[0];
      const auto depth = static_cast<std::uint64_t>(e.params[1]);
      if (arity == 1) return BigInt(depth + 1);
      return exact_div(ipow(arity, depth + 1) - 1, arity - 1, "tree size");
    }
    case ExprKind::kWedge: {
      BigInt size = 1;
      for (const auto& c : e.children) size += exact_size(c) - 1;
      return size;
    }
    case ExprKind::kRootedProduct:
      return exact_size(e.children[0]) * exact_size(e.children[1]);
    case ExprKind::kPower:
      return ipow(exact_size(e.children[0]),
                  static_cast<std::uint64_t>(e.params[0]));
    case ExprKind::kAttach:
      return exact_size(e.children[0]) + 1;
  }
  return 0;
}

}  // namespace

BigInt estimated_size(const TopologyExpr& e) {
  require_tractable(e);
  return exact_size(e);
}

}  // namespace transmit
