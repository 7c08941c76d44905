#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eulext/graph.hpp"

namespace eulext {

/// Endpoints of one walk still to be built. `first == second` requests a closed walk.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

/// Result of pairing odd-degree vertices with direct edges.
struct MarkingOutcome {
  Graph g0;                              // G plus every marked edge
  std::vector<Edge> marked;              // in the order they were marked
  std::vector<VertexPair> clique_pairs;  // leftover odd vertices, paired in ascending order
  std::optional<Graph> finished;         // set iff exactly m - b edges were marked and all degrees are even

  std::size_t walk_count() const noexcept { return clique_pairs.size(); }
};

/// Greedily joins non-adjacent odd vertices (lexicographically smallest pair
/// first) until either m - |E(G)| edges are marked or the unmarked odd vertices
/// form a clique.
///
/// Throws ExtensionError{kPrecondition} for disconnected G or m <= |E(G)|, and
/// ExtensionError{kBudgetExhausted} when the edge budget runs out while odd
/// vertices remain.
MarkingOutcome mark_edges(const Graph& g, std::size_t m);

/// Supplies a walk pair when marking left no clique. Either the last marked
/// edge is taken back out and its endpoints become the pair, or (nothing was
/// marked) a closed walk is anchored at the minimum-degree vertex.
///
/// Throws ExtensionError{kPrecondition} unless `outcome` is unfinished and has
/// no clique pairs.
MarkingOutcome resolve_empty_clique(MarkingOutcome outcome);

}  // namespace eulext
