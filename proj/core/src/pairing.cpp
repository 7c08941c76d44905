#include "eulext/pairing.hpp"

#include <algorithm>
#include <string>

#include "eulext/errors.hpp"

namespace eulext {

MarkingOutcome mark_edges(const Graph& g, std::size_t m) {
  if (!is_connected(g)) throw ExtensionError(ErrorKind::kPrecondition, "input graph is disconnected");
  if (m <= g.edge_count()) {
    throw ExtensionError(ErrorKind::kPrecondition,
                         "target m=" + std::to_string(m) + " must exceed |E(G)|=" +
                             std::to_string(g.edge_count()));
  }
  const std::size_t budget = m - g.edge_count();

  // Marked vertices drop out of the candidate set, so adjacency among the
  // remaining candidates is the same in G and in G plus the marked edges.
  const VertexSet odd = odd_vertices(g);
  std::vector<Vertex> unmarked(odd.members().begin(), odd.members().end());
  MarkingOutcome out;

  while (true) {
    if (out.marked.size() == budget) {
      Graph h = g.with_edges(out.marked);
      if (!odd_vertices(h).empty()) {
        throw ExtensionError(ErrorKind::kBudgetExhausted,
                             std::to_string(budget) + " marked edges used up the budget with " +
                                 std::to_string(unmarked.size()) + " odd vertices left");
      }
      out.g0 = h;
      out.finished = std::move(h);
      return out;
    }
    auto pair = non_adjacent_pair(g, VertexSet(unmarked));
    if (!pair) break;
    out.marked.push_back(*pair);
    std::erase_if(unmarked, [&](Vertex v) { return v == pair->u || v == pair->v; });
  }

  out.g0 = g.with_edges(out.marked);
  for (std::size_t i = 0; i + 1 < unmarked.size(); i += 2) {
    out.clique_pairs.push_back({unmarked[i], unmarked[i + 1]});
  }
  return out;
}

MarkingOutcome resolve_empty_clique(MarkingOutcome outcome) {
  if (outcome.finished) {
    throw ExtensionError(ErrorKind::kPrecondition, "marking already finished the extension");
  }
  if (!outcome.clique_pairs.empty()) {
    throw ExtensionError(ErrorKind::kPrecondition, "clique pairs already present");
  }
  if (!outcome.marked.empty()) {
    const Edge last = outcome.marked.back();
    outcome.marked.pop_back();
    outcome.g0 = outcome.g0.without_edge(last);
    outcome.clique_pairs.push_back({last.u, last.v});
    return outcome;
  }
  const Graph& g0 = outcome.g0;
  if (g0.vertex_count() == 0) throw ExtensionError(ErrorKind::kPrecondition, "empty graph");
  Vertex anchor = 0;
  for (Vertex v = 1; v < g0.vertex_count(); ++v) {
    if (g0.degree(v) < g0.degree(anchor)) anchor = v;
  }
  outcome.clique_pairs.push_back({anchor, anchor});
  return outcome;
}

}  // namespace eulext
