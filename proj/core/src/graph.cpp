#include "eulext/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "eulext/errors.hpp"

namespace eulext {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kHypothesisViolated: return "hypothesis-violated";
    case ErrorKind::kBudgetExhausted: return "budget-exhausted";
    case ErrorKind::kInfeasiblePlan: return "infeasible-plan";
    case ErrorKind::kNoCandidate: return "no-candidate";
    case ErrorKind::kRetriesExhausted: return "retries-exhausted";
    case ErrorKind::kDegreeOverflow: return "degree-overflow";
    case ErrorKind::kNotEulerian: return "not-eulerian";
    case ErrorKind::kInstanceTooLarge: return "instance-too-large";
    case ErrorKind::kGeneration: return "generation";
  }
  return "unknown";
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n) : n_(n), adjacency_(n > 0 ? n : 0) {
  if (n < 0) throw GraphError("negative vertex count");
}

namespace {

void check_pair(int n, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw GraphError("vertex id out of range in pair (" + std::to_string(a) + "," +
                     std::to_string(b) + ") for n=" + std::to_string(n));
  }
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
}

void reject_duplicates(const std::vector<Edge>& sorted) {
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + ")");
  }
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    check_pair(n, a, b);
    edges.push_back(Edge::canonical(a, b));
  }
  return from_edges(n, edges);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_pair(n, e.u, e.v);
    g.edges_.push_back(Edge::canonical(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  reject_duplicates(g.edges_);
  g.rebuild_adjacency();
  return g;
}

void Graph::rebuild_adjacency() {
  adjacency_.assign(n_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const Vertex other = &shorter == &adjacency_[a] ? b : a;
  return std::binary_search(shorter.begin(), shorter.end(), other);
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> added;
  added.reserve(extra.size());
  for (const Edge& e : extra) {
    check_pair(n_, e.u, e.v);
    added.push_back(Edge::canonical(e.u, e.v));
  }
  std::sort(added.begin(), added.end());
  reject_duplicates(added);

  Graph g(n_);
  g.edges_.reserve(edges_.size() + added.size());
  std::merge(edges_.begin(), edges_.end(), added.begin(), added.end(),
             std::back_inserter(g.edges_));
  reject_duplicates(g.edges_);
  g.rebuild_adjacency();
  return g;
}

Graph Graph::without_edge(Edge e) const {
  const Edge c = Edge::canonical(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), c);
  if (it == edges_.end() || *it != c) {
    throw GraphError("edge (" + std::to_string(c.u) + "," + std::to_string(c.v) +
                     ") not present");
  }
  Graph g(n_);
  g.edges_ = edges_;
  g.edges_.erase(g.edges_.begin() + (it - edges_.begin()));
  g.rebuild_adjacency();
  return g;
}

VertexSet odd_vertices(const Graph& g) {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  }
  return VertexSet(std::move(odd));
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

std::optional<Edge> non_adjacent_pair(const Graph& g, const VertexSet& candidates) {
  auto members = candidates.members();
  for (Vertex v : members) {
    if (v < 0 || v >= g.vertex_count()) {
      throw GraphError("vertex " + std::to_string(v) + " not in graph");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.has_edge(members[i], members[j])) return Edge{members[i], members[j]};
    }
  }
  return std::nullopt;
}

}  // namespace eulext
