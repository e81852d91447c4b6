#include "transmit/closed_forms.h"

#include <ostream>
#include <utility>

#include "transmit/dsl.h"
#include "transmit/errors.h"

namespace transmit {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw ValidationError(message);
}

std::uint64_t to_u64(const BigInt& value) {
  return value.convert_to<std::uint64_t>();
}

}  // namespace

std::ostream& operator<<(std::ostream& out, const TransmissionTriple& t) {
  return out << "(" << t.size << ", " << t.delta << ", " << t.delta0 << ")";
}

bool satisfies_invariants(const TransmissionTriple& t) {
  if (t.size < 1 || t.delta < 0 || t.delta0 < 0) return false;
  if (t.delta % 2 != 0) return false;
  if (t.delta < t.size * (t.size - 1)) return false;
  if (2 * t.delta0 > t.delta) return false;
  if (t.delta0 < t.size - 1) return false;
  return true;
}

TransmissionTriple single_vertex_triple() { return {1, 0, 0}; }

TransmissionTriple complete_triple(const BigInt& n) {
  require(n >= 1, "complete arity must be ≥ 1");
  return {n, n * (n - 1), n - 1};
}

TransmissionTriple cycle_triple(const BigInt& n) {
  require(n >= 3, "cycle arity must be ≥ 3");
  const BigInt cube = n * n * n;
  const BigInt delta = n % 2 == 1 ? exact_div(cube - n, 4, "cycle delta (odd)")
                                  : exact_div(cube, 4, "cycle delta (even)");
  // Root status: distances 1..floor(n/2) on both sides, the antipode once
  // when n is even.
  return {n, delta, (n * n) / 4};
}

TransmissionTriple star_triple(const BigInt& leaves) {
  require(leaves >= 1, "star leaf count must be ≥ 1");
  return {leaves + 1, 2 * leaves * leaves, leaves};
}

TransmissionTriple path_triple(const BigInt& n) {
  require(n >= 1, "path length must be ≥ 1");
  return {n, exact_div(n * n * n - n, 3, "path delta"),
          exact_div(n * (n - 1), 2, "path delta0")};
}

TransmissionTriple mesh_triple(std::span<const BigInt> dims) {
  require(!dims.empty(), "mesh needs at least one dimension");
  BigInt size = 1;
  for (const auto& r : dims) {
    require(r >= 1, "mesh dimensions must be ≥ 1");
    size *= r;
  }
  // δ = Σ_t (Π_{s≠t} R_s²)(R_t³ - R_t)/3, the per-axis |i - j| sums.
  // δ0 = Σ_t (Π_{s≠t} R_s) R_t(R_t - 1)/2, corner distances per axis.
  BigInt delta = 0;
  BigInt delta0 = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    const BigInt& r = dims[t];
    const BigInt others = size / r;
    delta += others * others * exact_div(r * r * r - r, 3, "mesh axis delta");
    delta0 += others * exact_div(r * (r - 1), 2, "mesh axis delta0");
  }
  return {size, delta, delta0};
}

TransmissionTriple wedge_triple(std::span<const TransmissionTriple> parts) {
  require(!parts.empty(), "wedge needs at least one part");
  const BigInt m = parts.size();
  BigInt total_size = 0;
  BigInt delta = 0;
  BigInt delta0 = 0;
  for (const auto& p : parts) {
    total_size += p.size;
    delta += p.delta;
    delta0 += p.delta0;
  }
  for (const auto& p : parts) {
    // 1 - m + Σ_{j≠i} |G_j|
    delta += 2 * p.delta0 * (1 - m + (total_size - p.size));
  }
  return {total_size - (m - 1), delta, delta0};
}

TransmissionTriple tilde_triple(const TransmissionTriple& t) {
  return {t.size + 1, t.delta + 2 * t.delta0 + 2 * t.size, t.delta0 + t.size};
}

TransmissionTriple rooted_product_triple(const TransmissionTriple& g,
                                         const TransmissionTriple& h) {
  return {
      g.size * h.size,
      g.size * h.delta + 2 * g.size * (g.size - 1) * h.size * h.delta0 +
          h.size * h.size * g.delta,
      h.size * g.delta0 + g.size * h.delta0,
  };
}

TransmissionTriple tree_triple(const BigInt& arity, std::uint64_t depth) {
  require(arity >= 1, "tree arity must be ≥ 1");
  TransmissionTriple t = single_vertex_triple();
  BigInt level = arity;  // n^(k+1) for the tree of depth k
  for (std::uint64_t k = 0; k < depth; ++k) {
    const TransmissionTriple branch = tilde_triple(t);
    // n copies of the tilde-branch glued at their roots.
    t.size = arity * branch.size - (arity - 1);
    t.delta = arity * branch.delta + 2 * arity * branch.delta0 * (level - 1);
    t.delta0 = arity * branch.delta0;
    level *= arity;
  }
  return t;
}

TreeClosedForms tree_closed_forms(const BigInt& arity, std::uint64_t depth) {
  require(arity >= 2, "tree closed forms need arity ≥ 2");
  const BigInt& n = arity;
  const BigInt k = depth;
  const BigInt nm1 = n - 1;
  const BigInt nm1_sq = nm1 * nm1;
  const BigInt nk = ipow(n, depth);
  const BigInt nk1 = nk * n;
  const BigInt nk2 = nk1 * n;

  const BigInt geometric = exact_div(nk - 1, nm1, "tree (n^k - 1)/(n - 1)");
  const BigInt delta = exact_div(2 * nk1 * (k * nk1 + k - 2 * n * geometric),
                                 nm1_sq, "tree delta");
  const BigInt delta0 =
      exact_div(k * nk2 - (k + 1) * nk1 + n, nm1_sq, "tree delta0");
  const BigInt delta0_tilde =
      exact_div((k + 1) * nk2 - (k + 2) * nk1 + 1, nm1_sq, "tree delta0 tilde");
  return {delta, delta0, delta0_tilde};
}

BigInt binary_tree_delta(std::uint64_t depth) {
  const BigInt k = depth;
  return ipow(2, depth + 2) * ((k - 2) * ipow(2, depth + 1) + k + 4);
}

PowerCoefficients power_coefficients(const BigInt& n, std::uint64_t k) {
  require(n >= 1, "power base size must be ≥ 1");
  require(k >= 1, "exponent must be ≥ 1");
  PowerCoefficients c{1, 0};
  const BigInt n_sq = n * n;
  BigInt nj = n;  // n^j at step j
  for (std::uint64_t j = 1; j < k; ++j) {
    c.a = nj + n_sq * c.a;
    c.b = 2 * nj * n * (nj - 1) + n_sq * c.b;
    nj *= n;
  }
  return c;
}

PowerCoefficients power_coefficients_closed_form(const BigInt& n,
                                                 std::uint64_t k) {
  require(n >= 2, "closed-form power coefficients need n ≥ 2");
  require(k >= 1, "exponent must be ≥ 1");
  const BigInt nk = ipow(n, k);
  const BigInt nk1 = ipow(n, k - 1);
  const BigInt a = nk1 * exact_div(nk - 1, n - 1, "a_k");
  const BigInt b = 2 * BigInt(k - 1) * nk1 * nk -
                   2 * nk * exact_div(nk1 - 1, n - 1, "b_k");
  return {a, b};
}

TransmissionTriple power_triple(const TransmissionTriple& base,
                                std::uint64_t k) {
  require(k >= 1, "exponent must be ≥ 1");
  const PowerCoefficients c = power_coefficients(base.size, k);
  const BigInt nk1 = ipow(base.size, k - 1);
  return {nk1 * base.size, c.a * base.delta + c.b * base.delta0,
          BigInt(k) * nk1 * base.delta0};
}

SeriesTerms gf_series(const BigInt& arity, std::size_t count) {
  require(arity >= 2, "arity must be ≥ 2");
  require(count >= 1, "term count must be ≥ 1");
  // 1/(1 - c x)^2 = Σ (i + 1) c^i x^i
  auto squared_geometric = [count](const BigInt& ratio) {
    std::vector<BigInt> coeffs(count);
    BigInt power = 1;
    for (std::size_t i = 0; i < count; ++i) {
      coeffs[i] = BigInt(i + 1) * power;
      power *= ratio;
    }
    return coeffs;
  };
  const auto left = squared_geometric(arity);
  const auto right = squared_geometric(arity * arity);
  const BigInt scale = 2 * arity * arity;

  SeriesTerms series{arity, std::vector<BigInt>(count)};
  for (std::size_t k = 0; k < count; ++k) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= k; ++i) sum += left[i] * right[k - i];
    series.terms[k] = scale * sum;
  }
  return series;
}

namespace {

TransmissionTriple evaluate_node(const TopologyExpr& e) {
  switch (e.kind) {
    case ExprKind::kComplete:
      return complete_triple(e.params[0]);
    case ExprKind::kCycle:
      return cycle_triple(e.params[0]);
    case ExprKind::kStar:
      return star_triple(e.params[0]);
    case ExprKind::kPath:
      return path_triple(e.params[0]);
    case ExprKind::kMesh:
      return mesh_triple(e.params);
    case ExprKind::kTree:
      return tree_triple(e.params[0], to_u64(e.params[1]));
    case ExprKind::kWedge: {
      std::vector<TransmissionTriple> parts;
      parts.reserve(e.children.size());
      for (const auto& c : e.children) parts.push_back(evaluate_node(c));
      return wedge_triple(parts);
    }
    case ExprKind::kRootedProduct:
      return rooted_product_triple(evaluate_node(e.children[0]),
                                   evaluate_node(e.children[1]));
    case ExprKind::kPower:
      return power_triple(evaluate_node(e.children[0]), to_u64(e.params[0]));
    case ExprKind::kAttach:
      return tilde_triple(evaluate_node(e.children[0]));
  }
  throw ValidationError("unknown expression kind");
}

}  // namespace

TransmissionTriple evaluate_expr(const TopologyExpr& e) {
  require_valid(e);
  require_tractable(e);
  return evaluate_node(e);
}

}  // namespace transmit
