#pragma once

#include <cstddef>
#include <cstdint>

#include "eulext/graph.hpp"

namespace eulext {

/// Random connected graph with exactly b edges and max degree <= delta_cap.
///
/// A uniform spanning tree (Prüfer code, rejected while it breaks the cap)
/// comes first; if the cap keeps rejecting, a capped random-attachment tree is
/// used instead. Extra edges are then drawn uniformly among the non-edges whose
/// endpoints both have spare capacity. Deterministic in `seed`.
///
/// Requires n - 1 <= b <= n * delta_cap / 2 and delta_cap >= 2; throws
/// ExtensionError{kGeneration} when the budget cannot be met.
Graph gen_random_connected_graph(int n, std::size_t b, int delta_cap, std::uint64_t seed);

}  // namespace eulext
