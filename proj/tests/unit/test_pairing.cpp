#include <random>

#include "doctest.h"
#include "eulext/errors.hpp"
#include "eulext/pairing.hpp"
#include "unit/test_support.hpp"

using namespace eulext;
using namespace eulext::testing;

namespace {

// Independent re-simulation of the marking loop on an adjacency matrix.
struct ReferenceMarking {
  bool budget_exhausted = false;
  bool finished = false;
  std::vector<Edge> marked;
  std::vector<VertexPair> pairs;
};

ReferenceMarking reference_marking(const Graph& g, std::size_t m) {
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<int> deg(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] = adj[e.v][e.u] = true;
    ++deg[e.u], ++deg[e.v];
  }
  std::vector<bool> open(n, false);
  for (int v = 0; v < n; ++v) open[v] = deg[v] % 2 == 1;

  ReferenceMarking out;
  const std::size_t budget = m - g.edge_count();
  while (true) {
    if (out.marked.size() == budget) {
      bool any_open = false;
      for (int v = 0; v < n; ++v) any_open = any_open || open[v];
      out.budget_exhausted = any_open;
      out.finished = !any_open;
      return out;
    }
    bool found = false;
    for (int u = 0; u < n && !found; ++u) {
      if (!open[u]) continue;
      for (int v = u + 1; v < n && !found; ++v) {
        if (open[v] && !adj[u][v]) {
          out.marked.push_back({u, v});
          open[u] = open[v] = false;
          found = true;
        }
      }
    }
    if (!found) break;
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (open[v]) rest.push_back(v);
  for (std::size_t i = 0; i + 1 < rest.size(); i += 2) out.pairs.push_back({rest[i], rest[i + 1]});
  return out;
}

}  // namespace

TEST_SUITE("pairing") {

TEST_CASE("mark_edges on the star K1,3") {
  const auto out = mark_edges(star(3), 7);
  REQUIRE(out.marked.size() == 1);
  CHECK(out.marked[0] == Edge{1, 2});
  REQUIRE(out.clique_pairs.size() == 1);
  CHECK(out.clique_pairs[0] == VertexPair{0, 3});
  CHECK(out.g0.edge_count() == 4);
  CHECK_FALSE(out.finished);
}

TEST_CASE("mark_edges finishes P4 into C4") {
  const auto out = mark_edges(path(4), 4);
  REQUIRE(out.finished);
  CHECK(*out.finished == cycle(4));
  CHECK(out.marked == std::vector<Edge>{{0, 3}});
  CHECK(out.clique_pairs.empty());
}

TEST_CASE("mark_edges with no odd vertices") {
  const auto out = mark_edges(complete(3), 5);
  CHECK(out.marked.empty());
  CHECK(out.clique_pairs.empty());
  CHECK_FALSE(out.finished);
  CHECK(out.g0 == complete(3));
}

TEST_CASE("mark_edges errors") {
  CHECK_THROWS_AS(mark_edges(make_graph(4, {{0, 1}, {2, 3}}), 5), ExtensionError);
  CHECK_THROWS_AS(mark_edges(path(4), 3), ExtensionError);
  // Six odd leaves but room for only one marked edge.
  try {
    mark_edges(star(5), 6);
    FAIL("expected budget-exhausted");
  } catch (const ExtensionError& e) {
    CHECK(e.kind() == ErrorKind::kBudgetExhausted);
  }
}

TEST_CASE("resolve_empty_clique takes back the last marked edge") {
  auto out = mark_edges(path(4), 6);
  REQUIRE_FALSE(out.finished);
  REQUIRE(out.clique_pairs.empty());
  out = resolve_empty_clique(std::move(out));
  CHECK(out.marked.empty());
  CHECK(out.g0 == path(4));
  CHECK(out.clique_pairs == std::vector<VertexPair>{{0, 3}});
}

TEST_CASE("resolve_empty_clique anchors a closed walk when nothing was marked") {
  auto out = resolve_empty_clique(mark_edges(complete(3), 5));
  CHECK(out.clique_pairs == std::vector<VertexPair>{{0, 0}});

  // Minimum degree wins over smallest id.
  const Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  out = resolve_empty_clique(mark_edges(g, 8));
  CHECK(out.clique_pairs == std::vector<VertexPair>{{1, 1}});
}

TEST_CASE("resolve_empty_clique guards") {
  CHECK_THROWS_AS(resolve_empty_clique(mark_edges(star(3), 7)), ExtensionError);
  CHECK_THROWS_AS(resolve_empty_clique(mark_edges(path(4), 4)), ExtensionError);
}

TEST_CASE("property: mark_edges matches reference re-simulation for n <= 7") {
  std::mt19937_64 rng(3);
  std::size_t compared = 0;
  auto compare = [&](const Graph& g) {
    if (!is_connected(g)) return;
    const std::size_t n = g.vertex_count();
    for (std::size_t m = g.edge_count() + 1; m <= n * (n - 1) / 2 + 2; ++m) {
      const auto ref = reference_marking(g, m);
      if (ref.budget_exhausted) {
        CHECK_THROWS_AS(mark_edges(g, m), ExtensionError);
        continue;
      }
      const auto out = mark_edges(g, m);
      CHECK(out.finished.has_value() == ref.finished);
      CHECK(out.marked == ref.marked);
      CHECK(out.clique_pairs == ref.pairs);
      CHECK(out.g0.edge_count() == g.edge_count() + out.marked.size());
      ++compared;

      // Invariants: marks are new edges, disjoint; clique vertices are pairwise adjacent in G.
      for (const Edge& e : out.marked) CHECK_FALSE(g.has_edge(e.u, e.v));
      std::vector<Vertex> touched;
      for (const Edge& e : out.marked) touched.insert(touched.end(), {e.u, e.v});
      CHECK(VertexSet(touched).size() == touched.size());
      CHECK(2 * out.marked.size() <= n);
      std::vector<Vertex> clique;
      for (const auto& p : out.clique_pairs) clique.insert(clique.end(), {p.first, p.second});
      for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) CHECK(g.has_edge(clique[i], clique[j]));
      if (!out.finished) CHECK(odd_vertices(out.g0) == VertexSet(clique));
    }
  };
  for (int n = 1; n <= 5; ++n) {
    const unsigned long long pairs = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) compare(from_mask(n, mask));
  }
  for (int round = 0; round < 300; ++round) compare(random_graph(6 + round % 2, 0.45, rng));
  CHECK(compared > 1000);
}

}  // TEST_SUITE
