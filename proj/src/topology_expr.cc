#include "transmit/topology_expr.h"

#include <utility>

namespace transmit {

std::string_view keyword(ExprKind kind) {
  switch (kind) {
    case ExprKind::kComplete: return "complete";
    case ExprKind::kCycle: return "cycle";
    case ExprKind::kStar: return "star";
    case ExprKind::kPath: return "path";
    case ExprKind::kMesh: return "mesh";
    case ExprKind::kTree: return "tree";
    case ExprKind::kWedge: return "wedge";
    case ExprKind::kRootedProduct: return "rprod";
    case ExprKind::kPower: return "power";
    case ExprKind::kAttach: return "attach";
  }
  return "?";
}

bool is_primitive(ExprKind kind) {
  switch (kind) {
    case ExprKind::kComplete:
    case ExprKind::kCycle:
    case ExprKind::kStar:
    case ExprKind::kPath:
    case ExprKind::kMesh:
    case ExprKind::kTree:
      return true;
    default:
      return false;
  }
}

TopologyExpr TopologyExpr::complete(BigInt n) {
  return {ExprKind::kComplete, {std::move(n)}, {}};
}
TopologyExpr TopologyExpr::cycle(BigInt n) {
  return {ExprKind::kCycle, {std::move(n)}, {}};
}
TopologyExpr TopologyExpr::star(BigInt leaves) {
  return {ExprKind::kStar, {std::move(leaves)}, {}};
}
TopologyExpr TopologyExpr::path(BigInt n) {
  return {ExprKind::kPath, {std::move(n)}, {}};
}
TopologyExpr TopologyExpr::mesh(std::vector<BigInt> dims) {
  return {ExprKind::kMesh, std::move(dims), {}};
}
TopologyExpr TopologyExpr::tree(BigInt arity, BigInt depth) {
  return {ExprKind::kTree, {std::move(arity), std::move(depth)}, {}};
}
TopologyExpr TopologyExpr::wedge(std::vector<TopologyExpr> parts) {
  return {ExprKind::kWedge, {}, std::move(parts)};
}
TopologyExpr TopologyExpr::rooted_product(TopologyExpr g, TopologyExpr h) {
  TopologyExpr e{ExprKind::kRootedProduct, {}, {}};
  e.children.push_back(std::move(g));
  e.children.push_back(std::move(h));
  return e;
}
TopologyExpr TopologyExpr::power(TopologyExpr base, BigInt exponent) {
  TopologyExpr e{ExprKind::kPower, {std::move(exponent)}, {}};
  e.children.push_back(std::move(base));
  return e;
}
TopologyExpr TopologyExpr::attach(TopologyExpr child) {
  TopologyExpr e{ExprKind::kAttach, {}, {}};
  e.children.push_back(std::move(child));
  return e;
}

namespace {

void render_into(const TopologyExpr& e, std::string& out) {
  out += keyword(e.kind);
  out += '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  for (const auto& child : e.children) {
    sep();
    render_into(child, out);
  }
  for (const auto& p : e.params) {
    sep();
    out += p.str();
  }
  out += ')';
}

}  // namespace

std::string render(const TopologyExpr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

}  // namespace transmit
