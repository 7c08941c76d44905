#include "eulext/generator.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "eulext/errors.hpp"

namespace eulext {

namespace {

using Engine = std::mt19937_64;

constexpr int kPruferAttempts = 32;
constexpr int kRestarts = 8;

std::vector<Edge> prufer_tree(int n, int cap, Engine& rng) {
  if (n == 1) return {};
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (int attempt = 0; attempt < kPruferAttempts; ++attempt) {
    std::vector<Vertex> code(n - 2);
    std::vector<int> degree(n, 1);
    for (auto& c : code) {
      c = pick(rng);
      ++degree[c];
    }
    if (*std::max_element(degree.begin(), degree.end()) > cap) continue;

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex c : code) {
      const Vertex leaf = leaves.top();
      leaves.pop();
      edges.push_back(Edge::canonical(leaf, c));
      if (--degree[c] == 1) leaves.push(c);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.push_back(Edge::canonical(a, leaves.top()));
    return edges;
  }
  return {};
}

// Vertices join in random order, each attaching to a random earlier vertex
// with spare capacity.
std::vector<Edge> capped_attachment_tree(int n, int cap, Engine& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> degree(n, 0);
  std::vector<Vertex> open{order[0]};
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t slot = pick(rng);
    const Vertex parent = open[slot];
    const Vertex child = order[i];
    edges.push_back(Edge::canonical(parent, child));
    if (++degree[parent] == cap) {
      open[slot] = open.back();
      open.pop_back();
    }
    if (++degree[child] < cap) open.push_back(child);
  }
  return edges;
}

bool add_extra_edges(int n, std::size_t target, int cap, std::vector<Edge>& edges, Engine& rng) {
  std::vector<int> degree(n, 0);
  std::unordered_set<std::uint64_t> present;
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
    present.insert(e.key());
  }
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  const std::size_t rejection_limit = 50 * static_cast<std::size_t>(n) + 1000;
  std::size_t misses = 0;

  while (edges.size() < target) {
    if (misses < rejection_limit) {
      const Vertex a = pick(rng), b = pick(rng);
      const Edge e = Edge::canonical(a, b);
      if (a == b || degree[a] >= cap || degree[b] >= cap || present.contains(e.key())) {
        ++misses;
        continue;
      }
      misses = 0;
      edges.push_back(e);
      present.insert(e.key());
      ++degree[a];
      ++degree[b];
      continue;
    }
    // Sparse admissible set: enumerate it and pick uniformly.
    std::vector<Edge> admissible;
    for (Vertex u = 0; u < n; ++u) {
      if (degree[u] >= cap) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (degree[v] < cap && !present.contains(Edge{u, v}.key())) admissible.push_back({u, v});
      }
    }
    if (admissible.empty()) return false;
    std::uniform_int_distribution<std::size_t> choose(0, admissible.size() - 1);
    const Edge e = admissible[choose(rng)];
    edges.push_back(e);
    present.insert(e.key());
    ++degree[e.u];
    ++degree[e.v];
  }
  return true;
}

}  // namespace

Graph gen_random_connected_graph(int n, std::size_t b, int delta_cap, std::uint64_t seed) {
  if (n < 1) throw ExtensionError(ErrorKind::kGeneration, "vertex count must be positive");
  if (delta_cap < 2 && n > 2) throw ExtensionError(ErrorKind::kGeneration, "delta_cap must be >= 2");
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t cap_limit = nn * static_cast<std::size_t>(delta_cap) / 2;
  const std::size_t complete = nn * (nn - 1) / 2;
  if (b + 1 < nn || b > cap_limit || b > complete) {
    throw ExtensionError(ErrorKind::kGeneration,
                         "edge budget " + std::to_string(b) + " unreachable for n=" + std::to_string(n) +
                             " under degree cap " + std::to_string(delta_cap));
  }

  Engine rng(seed);
  for (int restart = 0; restart < kRestarts; ++restart) {
    std::vector<Edge> edges = prufer_tree(n, delta_cap, rng);
    if (edges.size() + 1 < nn) edges = capped_attachment_tree(n, delta_cap, rng);
    if (add_extra_edges(n, b, delta_cap, edges, rng)) return Graph::from_edges(n, edges);
  }
  throw ExtensionError(ErrorKind::kGeneration,
                       "could not place " + std::to_string(b) + " edges under degree cap " +
                           std::to_string(delta_cap) + " after " + std::to_string(kRestarts) +
                           " restarts");
}

}  // namespace eulext
