#pragma once

#include <random>
#include <utility>
#include <vector>

#include "eulext/graph.hpp"

namespace eulext::testing {

inline Graph make_graph(int n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  return Graph::from_edge_list(n, pairs);
}

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex v = 0; v + 1 < n; ++v) p.emplace_back(v, v + 1);
  return make_graph(n, p);
}

inline Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex v = 0; v < n; ++v) p.emplace_back(v, (v + 1) % n);
  return make_graph(n, p);
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) p.emplace_back(u, v);
  return make_graph(n, p);
}

inline Graph star(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> p;
  for (Vertex v = 1; v <= leaves; ++v) p.emplace_back(0, v);
  return make_graph(leaves + 1, p);
}

/// Graph on n vertices whose edge set is given by the bits of `mask` over the
/// lexicographic list of pairs.
inline Graph from_mask(int n, unsigned long long mask) {
  std::vector<std::pair<Vertex, Vertex>> p;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1ULL) p.emplace_back(u, v);
  return make_graph(n, p);
}

/// Erdos-Renyi style G(n, p); no connectivity guarantee.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) pairs.emplace_back(u, v);
  return make_graph(n, pairs);
}

}  // namespace eulext::testing
