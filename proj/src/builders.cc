#include "transmit/builders.h"

#include <string>
#include <utility>
#include <vector>

#include "transmit/dsl.h"
#include "transmit/errors.h"

namespace transmit {

namespace {

using Edge = std::pair<Vertex, Vertex>;

void check_size(const BigInt& size, std::size_t max_vertices) {
  if (size > max_vertices) {
    throw ResourceError("graph would have " + size.str() +
                            " vertices, over the cap of " +
                            std::to_string(max_vertices),
                        size);
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw ValidationError(message);
}

std::size_t to_size(const BigInt& value) {
  return value.convert_to<std::size_t>();
}

RootedGraph make(std::size_t n, const std::vector<Edge>& edges, Vertex root) {
  return RootedGraph::from_edges(n, edges, root);
}

}  // namespace

RootedGraph complete_graph(std::size_t n, std::size_t max_vertices) {
  require(n >= 1, "complete arity must be ≥ 1");
  check_size(n, max_vertices);
  std::vector<std::vector<Vertex>> adjacency(n);
  for (std::size_t v = 0; v < n; ++v) {
    adjacency[v].reserve(n - 1);
    for (std::size_t w = 0; w < n; ++w) {
      if (w != v) adjacency[v].push_back(static_cast<Vertex>(w));
    }
  }
  return RootedGraph(std::move(adjacency), 0);
}

RootedGraph cycle_graph(std::size_t n, std::size_t max_vertices) {
  require(n >= 3, "cycle arity must be ≥ 3");
  check_size(n, max_vertices);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  }
  return make(n, edges, 0);
}

RootedGraph star_graph(std::size_t leaves, std::size_t max_vertices) {
  require(leaves >= 1, "star leaf count must be ≥ 1");
  check_size(BigInt(leaves) + 1, max_vertices);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) {
    edges.emplace_back(0, static_cast<Vertex>(v));
  }
  return make(leaves + 1, edges, 0);
}

RootedGraph path_graph(std::size_t n, std::size_t max_vertices) {
  require(n >= 1, "path length must be ≥ 1");
  check_size(n, max_vertices);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return make(n, edges, 0);
}

RootedGraph mesh_graph(std::span<const std::size_t> dims,
                       std::size_t max_vertices) {
  require(!dims.empty(), "mesh needs at least one dimension");
  BigInt total = 1;
  for (const auto r : dims) {
    require(r >= 1, "mesh dimensions must be ≥ 1");
    total *= r;
  }
  check_size(total, max_vertices);
  const std::size_t n = to_size(total);

  // stride[i] = product of dims after i (row-major).
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t i = dims.size() - 1; i > 0; --i) {
    stride[i - 1] = stride[i] * dims[i];
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const std::size_t coord = (v / stride[i]) % dims[i];
      if (coord + 1 < dims[i]) {
        edges.emplace_back(static_cast<Vertex>(v),
                           static_cast<Vertex>(v + stride[i]));
      }
    }
  }
  return make(n, edges, 0);
}

RootedGraph tree_graph(std::size_t arity, std::size_t depth,
                       std::size_t max_vertices) {
  require(arity >= 1, "tree arity must be ≥ 1");
  check_size(estimated_size(TopologyExpr::tree(arity, depth)), max_vertices);
  // Vertices at depth < k are internal; count them level by level.
  std::size_t internal = 0;
  std::size_t level = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    internal += level;
    level *= arity;
  }
  const std::size_t n = internal + level;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 0; v < internal; ++v) {
    for (std::size_t c = 1; c <= arity; ++c) {
      edges.emplace_back(static_cast<Vertex>(v),
                         static_cast<Vertex>(arity * v + c));
    }
  }
  return make(n, edges, 0);
}

RootedGraph wedge_graphs(std::span<const RootedGraph> parts,
                         std::size_t max_vertices) {
  require(!parts.empty(), "wedge needs at least one part");
  BigInt total = 1;
  for (const auto& p : parts) total += p.vertex_count() - 1;
  check_size(total, max_vertices);

  std::vector<Edge> edges;
  std::size_t next = 1;
  for (const auto& part : parts) {
    std::vector<Vertex> remap(part.vertex_count());
    for (std::size_t v = 0; v < part.vertex_count(); ++v) {
      remap[v] = v == part.root() ? 0 : static_cast<Vertex>(next++);
    }
    for (std::size_t v = 0; v < part.vertex_count(); ++v) {
      for (const Vertex w : part.neighbors(static_cast<Vertex>(v))) {
        if (v < w) edges.emplace_back(remap[v], remap[w]);
      }
    }
  }
  return make(next, edges, 0);
}

RootedGraph rooted_product_graphs(const RootedGraph& g, const RootedGraph& h,
                                  std::size_t max_vertices) {
  const std::size_t gn = g.vertex_count();
  const std::size_t hn = h.vertex_count();
  check_size(BigInt(gn) * hn, max_vertices);
  auto index = [hn](std::size_t gi, std::size_t hj) {
    return static_cast<Vertex>(gi * hn + hj);
  };
  std::vector<Edge> edges;
  for (std::size_t gi = 0; gi < gn; ++gi) {
    for (std::size_t hj = 0; hj < hn; ++hj) {
      for (const Vertex w : h.neighbors(static_cast<Vertex>(hj))) {
        if (hj < w) edges.emplace_back(index(gi, hj), index(gi, w));
      }
    }
    for (const Vertex w : g.neighbors(static_cast<Vertex>(gi))) {
      if (gi < w) edges.emplace_back(index(gi, h.root()), index(w, h.root()));
    }
  }
  return make(gn * hn, edges, index(g.root(), h.root()));
}

RootedGraph tilde_graph(const RootedGraph& g, std::size_t max_vertices) {
  check_size(BigInt(g.vertex_count()) + 1, max_vertices);
  std::vector<Edge> edges;
  edges.emplace_back(0, g.root() + 1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (v < w) edges.emplace_back(static_cast<Vertex>(v + 1), w + 1);
    }
  }
  return make(g.vertex_count() + 1, edges, 0);
}

RootedGraph power_graph(const RootedGraph& g, std::size_t k,
                        std::size_t max_vertices) {
  require(k >= 1, "exponent must be ≥ 1");
  check_size(ipow(BigInt(g.vertex_count()), k), max_vertices);
  RootedGraph result = g;
  for (std::size_t i = 1; i < k; ++i) {
    result = rooted_product_graphs(result, g, max_vertices);
  }
  return result;
}

namespace {

RootedGraph build_node(const TopologyExpr& e, std::size_t cap) {
  switch (e.kind) {
    case ExprKind::kComplete:
      return complete_graph(to_size(e.params[0]), cap);
    case ExprKind::kCycle:
      return cycle_graph(to_size(e.params[0]), cap);
    case ExprKind::kStar:
      return star_graph(to_size(e.params[0]), cap);
    case ExprKind::kPath:
      return path_graph(to_size(e.params[0]), cap);
    case ExprKind::kMesh: {
      std::vector<std::size_t> dims;
      for (const auto& r : e.params) dims.push_back(to_size(r));
      return mesh_graph(dims, cap);
    }
    case ExprKind::kTree:
      return tree_graph(to_size(e.params[0]), to_size(e.params[1]), cap);
    case ExprKind::kWedge: {
      std::vector<RootedGraph> parts;
      parts.reserve(e.children.size());
      for (const auto& c : e.children) parts.push_back(build_node(c, cap));
      return wedge_graphs(parts, cap);
    }
    case ExprKind::kRootedProduct:
      return rooted_product_graphs(build_node(e.children[0], cap),
                                   build_node(e.children[1], cap), cap);
    case ExprKind::kPower:
      return power_graph(build_node(e.children[0], cap), to_size(e.params[0]),
                         cap);
    case ExprKind::kAttach:
      return tilde_graph(build_node(e.children[0], cap), cap);
  }
  throw ValidationError("unknown expression kind");
}

}  // namespace

RootedGraph build_expr(const TopologyExpr& e, std::size_t max_vertices) {
  require_valid(e);
  check_size(estimated_size(e), max_vertices);
  return build_node(e, max_vertices);
}

}  // namespace transmit
