#include "transmit/rooted_graph.h"

#include <algorithm>
#include <string>
#include <thread>

#include "transmit/errors.h"

namespace transmit {

RootedGraph::RootedGraph(std::vector<std::vector<Vertex>> adjacency,
                         Vertex root)
    : adjacency_(std::move(adjacency)), root_(root) {
  const std::size_t n = adjacency_.size();
  if (n == 0) throw ValidationError("graph must have at least one vertex");
  if (root_ >= n) {
    throw ValidationError("root " + std::to_string(root_) + " out of range");
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& row = adjacency_[v];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Vertex w = row[i];
      if (w >= n) {
        throw ValidationError("neighbor index out of range at vertex " +
                              std::to_string(v));
      }
      if (w == v) {
        throw ValidationError("self-loop at vertex " + std::to_string(v));
      }
      if (i > 0 && row[i - 1] >= w) {
        throw ValidationError("neighbor list of vertex " + std::to_string(v) +
                              " is not strictly increasing");
      }
      const auto& back = adjacency_[w];
      if (!std::binary_search(back.begin(), back.end(),
                              static_cast<Vertex>(v))) {
        throw ValidationError("asymmetric edge " + std::to_string(v) + "-" +
                              std::to_string(w));
      }
    }
  }
}

RootedGraph RootedGraph::from_edges(
    std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
    Vertex root) {
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (auto& row : adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return RootedGraph(std::move(adjacency), root);
}

std::size_t RootedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

RootedGraph RootedGraph::with_root(Vertex root) const {
  return RootedGraph(adjacency_, root);
}

std::uint64_t DistanceHistogram::pair_count() const {
  std::uint64_t total = 0;
  for (const auto& [d, c] : counts) total += c;
  return total;
}

BigInt DistanceHistogram::weighted_sum() const {
  BigInt total = 0;
  for (const auto& [d, c] : counts) total += BigInt(d) * c;
  return total;
}

namespace {

void bfs_into(const RootedGraph& g, Vertex source, std::vector<HopCount>& dist,
              std::vector<Vertex>& queue) {
  dist.assign(g.vertex_count(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const HopCount next = dist[v] + 1;
    for (const Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
}

void check_cap(const RootedGraph& g, const OracleLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw ResourceError("graph has " + std::to_string(g.vertex_count()) +
                            " vertices, over the oracle cap of " +
                            std::to_string(limits.max_vertices),
                        BigInt(g.vertex_count()));
  }
}

void require_connected(const RootedGraph& g) {
  if (!is_connected(g)) {
    throw ConnectivityError("transmission is undefined on a disconnected graph");
  }
}

unsigned worker_count(const OracleLimits& limits, std::size_t sources) {
  unsigned threads = limits.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  // Small graphs are not worth a thread spawn.
  if (sources < 256) threads = 1;
  return static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(sources, 1)));
}

// Runs `visit(source, distances)` for every source, sharded across threads.
// Each shard receives its own index so results can be merged in order.
template <typename Visit>
void for_each_source(const RootedGraph& g, const OracleLimits& limits,
                     Visit&& visit) {
  const std::size_t n = g.vertex_count();
  const unsigned shards = worker_count(limits, n);
  auto work = [&](unsigned shard) {
    std::vector<HopCount> dist;
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::size_t s = shard; s < n; s += shards) {
      bfs_into(g, static_cast<Vertex>(s), dist, queue);
      visit(shard, dist);
    }
  };
  if (shards == 1) {
    work(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(shards);
  for (unsigned shard = 0; shard < shards; ++shard) pool.emplace_back(work, shard);
}

unsigned shard_count(const RootedGraph& g, const OracleLimits& limits) {
  return worker_count(limits, g.vertex_count());
}

}  // namespace

std::vector<HopCount> bfs_distances(const RootedGraph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw ValidationError("source vertex " + std::to_string(source) +
                          " out of range");
  }
  std::vector<HopCount> dist;
  std::vector<Vertex> queue;
  bfs_into(g, source, dist, queue);
  return dist;
}

bool is_connected(const RootedGraph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](HopCount d) { return d == kUnreachable; });
}

BigInt vertex_transmission(const RootedGraph& g, Vertex v,
                           const OracleLimits& limits) {
  check_cap(g, limits);
  const auto dist = bfs_distances(g, v);
  BigInt total = 0;
  for (const HopCount d : dist) {
    if (d == kUnreachable) {
      throw ConnectivityError(
          "transmission is undefined on a disconnected graph");
    }
    total += d;
  }
  return total;
}

BigInt root_transmission(const RootedGraph& g, const OracleLimits& limits) {
  return vertex_transmission(g, g.root(), limits);
}

BigInt graph_transmission(const RootedGraph& g, const OracleLimits& limits) {
  check_cap(g, limits);
  require_connected(g);
  // Per-source sums are at most n * diameter < 2^64 under any sane cap.
  std::vector<std::uint64_t> partial(shard_count(g, limits), 0);
  for_each_source(g, limits,
                  [&](unsigned shard, const std::vector<HopCount>& dist) {
                    std::uint64_t sum = 0;
                    for (const HopCount d : dist) sum += d;
                    partial[shard] += sum;
                  });
  BigInt total = 0;
  for (const auto p : partial) total += p;
  return total;
}

DistanceHistogram distance_histogram(const RootedGraph& g,
                                     const OracleLimits& limits) {
  check_cap(g, limits);
  require_connected(g);
  std::vector<std::vector<std::uint64_t>> partial(shard_count(g, limits));
  for_each_source(g, limits,
                  [&](unsigned shard, const std::vector<HopCount>& dist) {
                    auto& bins = partial[shard];
                    for (const HopCount d : dist) {
                      if (d >= bins.size()) bins.resize(d + 1, 0);
                      ++bins[d];
                    }
                  });
  DistanceHistogram histogram;
  for (const auto& bins : partial) {
    for (std::size_t d = 0; d < bins.size(); ++d) {
      if (bins[d] != 0) histogram.counts[static_cast<HopCount>(d)] += bins[d];
    }
  }
  return histogram;
}

}  // namespace transmit
