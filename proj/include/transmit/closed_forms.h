#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "transmit/bigint.h"
#include "transmit/topology_expr.h"

namespace transmit {

// (|G|, δ(G), δ0(G)): vertex count, sum of distances over all ordered vertex
// pairs, and the root's status. Isomorphism invariants of rooted graphs.
struct TransmissionTriple {
  BigInt size = 1;
  BigInt delta = 0;
  BigInt delta0 = 0;

  bool operator==(const TransmissionTriple&) const = default;
};

std::ostream& operator<<(std::ostream& out, const TransmissionTriple& t);

// Checks the structural invariants every connected rooted graph satisfies:
// δ even, δ ≥ n(n-1), 2·δ0 ≤ δ, δ0 ≥ n-1.
bool satisfies_invariants(const TransmissionTriple& t);

TransmissionTriple single_vertex_triple();

// Primitives with the root conventions of the builders (complete/cycle at 0,
// star at its center, path at an endpoint, mesh at a corner).
TransmissionTriple complete_triple(const BigInt& n);
TransmissionTriple cycle_triple(const BigInt& n);
TransmissionTriple star_triple(const BigInt& leaves);
TransmissionTriple path_triple(const BigInt& n);
TransmissionTriple mesh_triple(std::span<const BigInt> dims);

// One-point union of all parts at their roots.
TransmissionTriple wedge_triple(std::span<const TransmissionTriple> parts);

// Pendant root attached to the old root.
TransmissionTriple tilde_triple(const TransmissionTriple& t);

TransmissionTriple rooted_product_triple(const TransmissionTriple& g,
                                         const TransmissionTriple& h);

// Perfect arity-ary tree of the given depth, by iterating the tilde/wedge
// recurrence from a single vertex. Integer-only, so arity 1 is fine.
TransmissionTriple tree_triple(const BigInt& arity, std::uint64_t depth);

struct TreeClosedForms {
  BigInt delta;
  BigInt delta0;
  BigInt delta0_tilde;

  bool operator==(const TreeClosedForms&) const = default;
};

// Explicit formulas for the perfect tree; they divide by (arity-1)^2, so
// arity must be ≥ 2 (ValidationError otherwise).
TreeClosedForms tree_closed_forms(const BigInt& arity, std::uint64_t depth);

// δ(T_2^k) = 2^(k+2)((k-2)2^(k+1) + k + 4).
BigInt binary_tree_delta(std::uint64_t depth);

struct PowerCoefficients {
  BigInt a;
  BigInt b;

  bool operator==(const PowerCoefficients&) const = default;
};

// Coefficients with δ(G^k) = a·δ(G) + b·δ0(G) for |G| = n, via the
// recurrences a1 = 1, a(k+1) = n^k + n^2 a(k); b1 = 0,
// b(k+1) = 2n^(k+1)(n^k - 1) + n^2 b(k). Valid for every n ≥ 1.
PowerCoefficients power_coefficients(const BigInt& n, std::uint64_t k);

// The same coefficients from their polynomial closed forms; n ≥ 2.
PowerCoefficients power_coefficients_closed_form(const BigInt& n,
                                                 std::uint64_t k);

// k-th rooted power: |G^k| = n^k, δ0(G^k) = k n^(k-1) δ0(G).
TransmissionTriple power_triple(const TransmissionTriple& base,
                                std::uint64_t k);

struct SeriesTerms {
  BigInt arity;
  // terms[k] = δ(T_arity^(k+1)).
  std::vector<BigInt> terms;
};

// First `count` coefficients of 2n^2 / ((1 - n x)^2 (1 - n^2 x)^2) by exact
// convolution of the two squared geometric series.
SeriesTerms gf_series(const BigInt& arity, std::size_t count);

// Compositional evaluation; never materializes a graph. Validates the
// expression first (ValidationError) and refuses intractable sizes
// (ResourceError).
TransmissionTriple evaluate_expr(const TopologyExpr& e);

}  // namespace transmit
