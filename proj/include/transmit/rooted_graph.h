#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "transmit/bigint.h"

namespace transmit {

using Vertex = std::uint32_t;
using HopCount = std::uint32_t;

inline constexpr HopCount kUnreachable = std::numeric_limits<HopCount>::max();
inline constexpr std::size_t kDefaultMaxVertices = 100'000;

// Finite simple undirected graph with one designated root. Immutable after
// construction; neighbor lists are strictly increasing.
class RootedGraph {
 public:
  // Validates symmetry, absence of self-loops and duplicates, and root range.
  // Throws ValidationError on violation.
  RootedGraph(std::vector<std::vector<Vertex>> adjacency, Vertex root);

  // Builds from an undirected edge list; duplicate edges are merged,
  // self-loops rejected.
  static RootedGraph from_edges(std::size_t vertex_count,
                                std::span<const std::pair<Vertex, Vertex>> edges,
                                Vertex root);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  Vertex root() const { return root_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const std::vector<std::vector<Vertex>>& adjacency() const {
    return adjacency_;
  }

  // Same underlying graph with a different root.
  RootedGraph with_root(Vertex root) const;

  bool operator==(const RootedGraph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  Vertex root_;
};

// Ordered-pair count per hop distance.
struct DistanceHistogram {
  std::map<HopCount, std::uint64_t> counts;

  std::uint64_t pair_count() const;
  BigInt weighted_sum() const;
  bool operator==(const DistanceHistogram&) const = default;
};

// Guards the brute-force routines below.
struct OracleLimits {
  std::size_t max_vertices = kDefaultMaxVertices;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Shortest-path hop counts from `source`; unreachable vertices get
// kUnreachable. Throws ValidationError when source is out of range.
std::vector<HopCount> bfs_distances(const RootedGraph& g, Vertex source);

bool is_connected(const RootedGraph& g);

// The following throw ConnectivityError on disconnected input and
// ResourceError when the graph exceeds limits.max_vertices.
BigInt vertex_transmission(const RootedGraph& g, Vertex v,
                           const OracleLimits& limits = {});
BigInt root_transmission(const RootedGraph& g, const OracleLimits& limits = {});
BigInt graph_transmission(const RootedGraph& g, const OracleLimits& limits = {});
DistanceHistogram distance_histogram(const RootedGraph& g,
                                     const OracleLimits& limits = {});

}  // namespace transmit
