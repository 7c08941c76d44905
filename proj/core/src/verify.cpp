#include "eulext/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eulext/errors.hpp"

namespace eulext {

std::vector<Vertex> hierholzer_circuit(const Graph& h) {
  const int n = h.vertex_count();
  if (h.edge_count() == 0) return {};
  if (!odd_vertices(h).empty()) throw ExtensionError(ErrorKind::kNotEulerian, "odd-degree vertex present");

  // Incidence lists sorted by neighbour id, edge ids index into h.edges().
  const auto edges = h.edges();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident(n);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    incident[edges[id].u].emplace_back(edges[id].v, id);
    incident[edges[id].v].emplace_back(edges[id].u, id);
  }
  for (auto& list : incident) std::sort(list.begin(), list.end());

  Vertex start = 0;
  while (h.degree(start) == 0) ++start;

  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> popped;
  popped.reserve(edges.size() + 1);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto& list = incident[v];
    std::size_t& pos = cursor[v];
    while (pos < list.size() && used[list[pos].second]) ++pos;
    if (pos == list.size()) {
      popped.push_back(v);
      stack.pop_back();
    } else {
      used[list[pos].second] = 1;
      stack.push_back(list[pos].first);
    }
  }

  if (popped.size() != edges.size() + 1) {
    throw ExtensionError(ErrorKind::kNotEulerian, "edges lie in more than one component");
  }
  std::reverse(popped.begin(), popped.end());
  popped.pop_back();
  return popped;
}

bool circuit_covers(const Graph& h, const std::vector<Vertex>& circuit) {
  if (circuit.size() != h.edge_count()) return false;
  if (circuit.empty()) return true;
  std::vector<Edge> walked;
  walked.reserve(circuit.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Vertex a = circuit[i];
    const Vertex b = circuit[(i + 1) % circuit.size()];
    if (!h.has_edge(a, b)) return false;
    walked.push_back(Edge::canonical(a, b));
  }
  std::sort(walked.begin(), walked.end());
  return std::equal(walked.begin(), walked.end(), h.edges().begin(), h.edges().end());
}

VerificationReport verify_extension(const Graph& g, const Graph& h, std::size_t m) {
  VerificationReport r;
  if (g.vertex_count() != h.vertex_count()) {
    r.failures.push_back("vertex counts differ: G has " + std::to_string(g.vertex_count()) +
                         ", H has " + std::to_string(h.vertex_count()));
    return r;
  }

  r.edge_count_ok = h.edge_count() == m;
  if (!r.edge_count_ok) {
    r.failures.push_back("H has " + std::to_string(h.edge_count()) + " edges, expected " +
                         std::to_string(m));
  }

  r.contains_g = std::includes(h.edges().begin(), h.edges().end(), g.edges().begin(), g.edges().end());
  if (!r.contains_g) r.failures.push_back("H does not contain every edge of G");

  r.connected = is_connected(h);
  if (!r.connected) r.failures.push_back("H is disconnected");

  const VertexSet odd = odd_vertices(h);
  r.all_even = odd.empty();
  if (!r.all_even) r.failures.push_back(std::to_string(odd.size()) + " odd-degree vertices in H");

  if (r.all_even && r.connected) {
    try {
      r.circuit_ok = circuit_covers(h, hierholzer_circuit(h));
    } catch (const ExtensionError& e) {
      r.failures.push_back(e.what());
    }
    if (!r.circuit_ok) r.failures.push_back("Eulerian circuit does not cover H");
  } else {
    r.failures.push_back("no Eulerian circuit extracted");
  }
  return r;
}

namespace {

// Union-find over vertices; kept separate from graph_core so the oracle does
// not share a connectivity routine with the code it checks.
struct Components {
  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

bool eulerian_superset(int n, std::span<const Edge> base, std::span<const Edge> complement,
                       const std::vector<std::size_t>& chosen) {
  std::vector<int> degree(n, 0);
  for (const Edge& e : base) ++degree[e.u], ++degree[e.v];
  for (std::size_t idx : chosen) ++degree[complement[idx].u], ++degree[complement[idx].v];
  for (int d : degree) {
    if (d % 2) return false;
  }
  Components comp(n);
  for (const Edge& e : base) comp.join(e.u, e.v);
  for (std::size_t idx : chosen) comp.join(complement[idx].u, complement[idx].v);
  for (int v = 1; v < n; ++v) {
    if (comp.find(v) != comp.find(0)) return false;
  }
  return true;
}

}  // namespace

std::optional<Graph> brute_force_extendable(const Graph& g, std::size_t m) {
  const int n = g.vertex_count();
  if (n > kBruteForceMaxVertices) {
    throw ExtensionError(ErrorKind::kInstanceTooLarge,
                         "brute force supports n <= " + std::to_string(kBruteForceMaxVertices));
  }
  if (m < g.edge_count()) return std::nullopt;

  std::vector<Edge> complement;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) complement.push_back({u, v});
    }
  }
  const std::size_t k = m - g.edge_count();
  if (k > complement.size()) return std::nullopt;

  // Lexicographic k-combinations of complement indices.
  std::vector<std::size_t> chosen(k);
  std::iota(chosen.begin(), chosen.end(), 0);
  while (true) {
    if (eulerian_superset(n, g.edges(), complement, chosen)) {
      std::vector<Edge> extra;
      for (std::size_t idx : chosen) extra.push_back(complement[idx]);
      return g.with_edges(extra);
    }
    std::size_t i = k;
    while (i > 0 && chosen[i - 1] == complement.size() - k + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++chosen[i - 1];
    for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

}  // namespace eulext
