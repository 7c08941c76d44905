#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eulext/graph.hpp"

namespace eulext {

struct VerificationReport {
  bool edge_count_ok = false;
  bool contains_g = false;
  bool connected = false;
  bool all_even = false;
  bool circuit_ok = false;
  std::vector<std::string> failures;

  bool pass() const noexcept {
    return edge_count_ok && contains_g && connected && all_even && circuit_ok;
  }
};

/// Checks that `h` is an Eulerian extension of `g` with exactly m edges.
/// Never throws on a failed check; findings go into `failures`.
VerificationReport verify_extension(const Graph& g, const Graph& h, std::size_t m);

/// Deterministic Hierholzer: starts at the smallest vertex with an edge and
/// always leaves through the smallest unused incident edge. The returned
/// sequence has one entry per edge; the closing edge back to the first vertex
/// is implicit. Edgeless graphs give an empty circuit.
///
/// Throws ExtensionError{kNotEulerian} on an odd degree or when the edges are
/// spread over more than one component.
std::vector<Vertex> hierholzer_circuit(const Graph& h);

/// True iff `circuit` (closing edge implicit) uses every edge of `h` exactly once.
bool circuit_covers(const Graph& h, const std::vector<Vertex>& circuit);

inline constexpr int kBruteForceMaxVertices = 10;

/// Exhaustive search over (m - b)-subsets of the complement edges, in
/// lexicographic order of the sorted complement; returns the first Eulerian
/// supergraph found.
///
/// Throws ExtensionError{kInstanceTooLarge} for n > 10.
std::optional<Graph> brute_force_extendable(const Graph& g, std::size_t m);

}  // namespace eulext
