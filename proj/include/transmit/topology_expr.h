#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "transmit/bigint.h"

namespace transmit {

enum class ExprKind {
  kComplete,
  kCycle,
  kStar,
  kPath,
  kMesh,
  kTree,
  kWedge,
  kRootedProduct,
  kPower,
  kAttach,
};

// DSL keyword for a node kind ("complete", "rprod", ...).
std::string_view keyword(ExprKind kind);

bool is_primitive(ExprKind kind);

// Tree-shaped description of a composed topology.
//
// Parameter layout per kind:
//   complete/cycle/star/path: params = {n}
//   mesh:                     params = {R1, ..., Rd}
//   tree:                     params = {arity, depth}
//   wedge:                    children = {G1, ..., Gm}
//   rprod:                    children = {G, H}
//   power:                    children = {G}, params = {k}
//   attach:                   children = {G}
struct TopologyExpr {
  ExprKind kind = ExprKind::kComplete;
  std::vector<BigInt> params;
  std::vector<TopologyExpr> children;

  static TopologyExpr complete(BigInt n);
  static TopologyExpr cycle(BigInt n);
  static TopologyExpr star(BigInt leaves);
  static TopologyExpr path(BigInt n);
  static TopologyExpr mesh(std::vector<BigInt> dims);
  static TopologyExpr tree(BigInt arity, BigInt depth);
  static TopologyExpr wedge(std::vector<TopologyExpr> parts);
  static TopologyExpr rooted_product(TopologyExpr g, TopologyExpr h);
  static TopologyExpr power(TopologyExpr base, BigInt exponent);
  static TopologyExpr attach(TopologyExpr child);

  bool operator==(const TopologyExpr&) const = default;
};

// Canonical text: keywords, no whitespace except ", " between arguments.
std::string render(const TopologyExpr& e);

}  // namespace transmit
