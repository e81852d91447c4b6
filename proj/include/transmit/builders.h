#pragma once

#include <cstddef>
#include <span>

#include "transmit/rooted_graph.h"
#include "transmit/topology_expr.h"

namespace transmit {

// Vertex numbering of the materialized primitives:
//   complete, cycle, path: 0..n-1 in natural order, root 0 (path root is an
//     endpoint).
//   star(n): center 0 is the root, leaves 1..n.
//   mesh(R1..Rd): row-major over coordinates 0..Ri-1 (last coordinate varies
//     fastest), root is the corner 0.
//   tree(a, k): breadth-first order, children of v are a*v+1 .. a*v+a, root 0.
//
// All builders throw ValidationError on out-of-range parameters and
// ResourceError when the result would exceed `max_vertices`.

RootedGraph complete_graph(std::size_t n,
                           std::size_t max_vertices = kDefaultMaxVertices);
RootedGraph cycle_graph(std::size_t n,
                        std::size_t max_vertices = kDefaultMaxVertices);
RootedGraph star_graph(std::size_t leaves,
                       std::size_t max_vertices = kDefaultMaxVertices);
RootedGraph path_graph(std::size_t n,
                       std::size_t max_vertices = kDefaultMaxVertices);
RootedGraph mesh_graph(std::span<const std::size_t> dims,
                       std::size_t max_vertices = kDefaultMaxVertices);
RootedGraph tree_graph(std::size_t arity, std::size_t depth,
                       std::size_t max_vertices = kDefaultMaxVertices);

// One-point union: every part's root is identified with the new root 0 and
// the remaining vertices of each part follow in part order.
RootedGraph wedge_graphs(std::span<const RootedGraph> parts,
                         std::size_t max_vertices = kDefaultMaxVertices);

// Vertex (g, h) becomes g * |H| + h. G's edges join only the copies of H's
// root; H's edges live inside every copy.
RootedGraph rooted_product_graphs(const RootedGraph& g, const RootedGraph& h,
                                  std::size_t max_vertices = kDefaultMaxVertices);

// New pendant root 0 attached to the old root; old vertices shift by one.
RootedGraph tilde_graph(const RootedGraph& g,
                        std::size_t max_vertices = kDefaultMaxVertices);

// G^1 = G, G^(k+1) = rooted_product_graphs(G^k, G).
RootedGraph power_graph(const RootedGraph& g, std::size_t k,
                        std::size_t max_vertices = kDefaultMaxVertices);

// Materializes a validated expression. The size is checked with
// estimated_size() before anything is allocated.
RootedGraph build_expr(const TopologyExpr& e,
                       std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace transmit
