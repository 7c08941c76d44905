#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace eulext {

/// Vertices are dense ids 0..n-1.
using Vertex = std::int32_t;

/// Unordered vertex pair in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge canonical(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  /// 64-bit key usable in hash containers; only meaningful for canonical edges.
  constexpr std::uint64_t key() const noexcept {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and deduplicates.
  explicit VertexSet(std::vector<Vertex> members);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Values are immutable once built; the `with_*` / `without_*` members return
/// new graphs. Neighbour lists and the edge list are kept sorted, so iteration
/// order is deterministic.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n = 0);

  /// Rejects self-loops, duplicate pairs (in either orientation) and ids outside [0, n).
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Same graph plus `extra`; throws GraphError if any extra edge is invalid or already present.
  Graph with_edges(std::span<const Edge> extra) const;
  /// Throws GraphError if `e` is not an edge.
  Graph without_edge(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void rebuild_adjacency();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

VertexSet odd_vertices(const Graph& g);

/// True iff every vertex is reachable from vertex 0 (isolated vertices count).
bool is_connected(const Graph& g);

/// Lexicographically smallest pair u < v of `candidates` with {u,v} not an edge,
/// or nullopt when `candidates` induces a clique.
std::optional<Edge> non_adjacent_pair(const Graph& g, const VertexSet& candidates);

}  // namespace eulext
