#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transmit/bigint.h"
#include "transmit/topology_expr.h"

namespace transmit {

// Syntax error at a 1-based byte position; position input.size() + 1 means
// end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t byte_offset, std::string expected, std::string found);

  std::size_t byte_offset() const { return byte_offset_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t byte_offset_;
  std::string expected_;
  std::string found_;
};

// Parses a single topology expression. Checks syntax only; parameter ranges
// are left to validate(). Throws ParseError.
TopologyExpr parse(std::string_view input);

struct Violation {
  std::string node_path;  // e.g. "wedge[1].power.base"
  std::string message;

  bool operator==(const Violation&) const = default;
};

// Upper bounds that keep exact evaluation tractable. Values beyond these are
// reported as violations rather than attempted.
inline constexpr std::uint64_t kMaxExponent = 65'536;
inline constexpr double kMaxSizeBits = 65'536.0;

// Every parameter-range violation in the tree. Never throws.
std::vector<Violation> validate(const TopologyExpr& e);

// Throws ValidationError listing every violation, if any.
void require_valid(const TopologyExpr& e);

// Upper bound on log2 of the vertex count, computed in floating point so it
// is cheap even for astronomically large expressions.
double size_log2_bound(const TopologyExpr& e);

// Exact vertex count of the materialized graph. Throws ResourceError when
// size_log2_bound exceeds kMaxSizeBits.
BigInt estimated_size(const TopologyExpr& e);

// Throws ResourceError when exact evaluation would exceed kMaxSizeBits.
void require_tractable(const TopologyExpr& e);

}  // namespace transmit
