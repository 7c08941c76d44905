#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "eulext/graph.hpp"

namespace eulext {

using Rng = std::mt19937_64;

/// Multiplier on c_n in the bad-edge acceptance threshold.
inline constexpr int kBadEdgeFactor = 5;

/// max(2w/n, 100 ln n)
double compute_a_n(std::int64_t w, int n);

/// 1 + 2(b0 + w)w / n^2
double compute_c_n(std::int64_t b0, std::int64_t w, int n);

/// Candidate walk (X_0 = u1, X_1..X_w, X_{w+1} = u2). Entries may repeat and
/// may coincide with their neighbours until the repair passes have run.
class WalkSequence {
 public:
  /// Throws ExtensionError{kPrecondition} if `interior` is empty.
  WalkSequence(Vertex u1, Vertex u2, std::vector<Vertex> interior);

  Vertex u1() const noexcept { return entries_.front(); }
  Vertex u2() const noexcept { return entries_.back(); }
  /// Interior length w.
  std::size_t length() const noexcept { return entries_.size() - 2; }

  /// X_i for 0 <= i <= w+1.
  Vertex at(std::size_t i) const { return entries_.at(i); }
  /// Overwrites an interior entry (1 <= i <= w).
  void set(std::size_t i, Vertex v);

  std::span<const Vertex> entries() const noexcept { return entries_; }
  std::span<const Vertex> interior() const noexcept {
    return std::span<const Vertex>(entries_).subspan(1, length());
  }

  /// The w+1 consecutive pairs in canonical form; a self-loop shows up as {x,x}.
  std::vector<Edge> edges() const;

  friend bool operator==(const WalkSequence&, const WalkSequence&) = default;

 private:
  std::vector<Vertex> entries_;
};

/// Indicators and counts of the four acceptance events for one sampled sequence.
struct EventStats {
  int dv_max = 0;            // largest multiplicity of a vertex among X_1..X_w
  double a_n = 0.0;
  std::size_t n_v_bad = 0;   // includes the always-bad X_w
  std::size_t n_e_bad = 0;
  double c_n = 0.0;
  bool e_valid = false;
  bool e_deg = false;
  bool e_v_bad = false;
  bool e_e_bad = false;
  bool e_joint = false;
};

WalkSequence sample_sequence(Vertex u1, Vertex u2, std::size_t w, int n, Rng& rng);

/// `acc` is the accumulated graph the walk must avoid; `b0` its edge count.
EventStats evaluate_events(const WalkSequence& seq, const Graph& acc, std::size_t b0);

/// Positions l in [0, w] whose edge (X_l, X_{l+1}) is in `acc` or reappears at
/// some position >= l + 2.
std::vector<std::size_t> bad_edge_positions(const WalkSequence& seq, const Graph& acc);

struct RepairOptions {
  /// Reject (as no-candidate) any step that pushes a vertex past n/2 - 5 in acc + sequence.
  bool enforce_degree_budget = false;
};

struct RepairResult {
  WalkSequence sequence;
  std::size_t steps = 0;  // replacement rounds performed
};

/// Clears every bad vertex X_i (i < w) lowest index first by rewriting
/// X_{i+1}, X_{i+2}, then rewrites the tail so that X_{w-1}, X_w and u2 are
/// pairwise distinct and non-adjacent. Replacement vertices are the smallest
/// ids outside the closed neighbourhoods involved.
///
/// Throws ExtensionError{kNoCandidate} when no replacement exists.
RepairResult repair_bad_vertices(const WalkSequence& seq, const Graph& acc,
                                 const RepairOptions& options = {});

/// Replaces X_{l+1} for the lowest bad edge (X_l, X_{l+1}) until none remain.
/// Input must be free of bad vertices (throws kPrecondition otherwise).
///
/// Throws ExtensionError{kNoCandidate} when no replacement exists.
RepairResult repair_bad_edges(const WalkSequence& seq, const Graph& acc,
                              const RepairOptions& options = {});

/// How often each rejection reason fired inside one build_walk call.
struct EventFailureTally {
  std::size_t valid = 0;
  std::size_t deg = 0;
  std::size_t v_bad = 0;
  std::size_t e_bad = 0;
  std::size_t no_candidate = 0;

  EventFailureTally& operator+=(const EventFailureTally& other);
  /// Name of the most frequent reason, or "none".
  std::string dominant() const;
};

struct WalkConfig {
  std::size_t max_retries = 10000;
  bool enforce_degree_budget = false;
};

struct WalkResult {
  std::vector<Vertex> vertices;  // u1, X_1, ..., X_w, u2
  std::vector<Edge> edges;       // w + 1 canonical edges
  std::size_t retries = 0;       // rejected samples before the accepted one
  std::size_t vertex_repairs = 0;
  std::size_t edge_repairs = 0;
  EventStats accepted_stats;
  EventFailureTally failures;
};

/// Las Vegas construction of a w+1 edge walk from u1 to u2 that is
/// edge-disjoint from `acc`, uses no edge twice and has no self-loops.
///
/// Throws ExtensionError{kInfeasiblePlan} for a closed walk with w < 2 and
/// ExtensionError{kRetriesExhausted} once `config.max_retries` samples failed.
WalkResult build_walk(Vertex u1, Vertex u2, std::size_t w, const Graph& acc, std::size_t b0,
                      Rng& rng, const WalkConfig& config = {});

}  // namespace eulext
