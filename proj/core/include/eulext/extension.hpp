#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eulext/graph.hpp"
#include "eulext/pairing.hpp"
#include "eulext/walk_builder.hpp"

namespace eulext {

enum class Mode {
  kStrict,    // refuse instances outside the hypothesis class, enforce degree bounds
  kAdvisory,  // attempt anyway, record violations
};

struct InstanceStats {
  int n = 0;
  std::size_t b = 0;
  int delta = 0;

  static InstanceStats of(const Graph& g) {
    return {g.vertex_count(), g.edge_count(), g.max_degree()};
  }
};

struct FeasibilityReport {
  InstanceStats instance;
  std::size_t m = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double alpha_implied = 0.0;  // m / n^{3/2}
  double beta_implied = 0.0;   // delta / n
  bool m_at_least_2n = false;
  bool m_at_most_alpha_n32 = false;
  bool delta_at_most_beta_n = false;
  bool b_at_most_m_minus_n = false;
  bool constants_admissible = false;  // beta + 40 alpha^2 < 1/2
  Mode mode = Mode::kAdvisory;

  bool all_pass() const noexcept {
    return m_at_least_2n && m_at_most_alpha_n32 && delta_at_most_beta_n && b_at_most_m_minus_n &&
           constants_admissible;
  }
  /// Names of failed checks, in declaration order.
  std::vector<std::string> violations() const;
};

/// alpha and beta must lie in (0, 1); throws ExtensionError{kPrecondition} otherwise.
FeasibilityReport check_feasibility(const InstanceStats& instance, std::size_t m, double alpha,
                                    double beta, Mode mode = Mode::kAdvisory);
FeasibilityReport check_feasibility(const Graph& g, std::size_t m, double alpha, double beta,
                                    Mode mode = Mode::kAdvisory);

/// Split of the m - b0 remaining edges into z walk lengths.
struct WalkPlan {
  std::size_t z = 0;
  std::size_t w = 0;
  std::size_t r = 0;
  std::vector<std::size_t> lengths;  // z-1 copies of w, then w + r
};

/// w = floor((m - b0) / z), r the remainder, last walk takes w + r edges.
/// Throws ExtensionError{kInfeasiblePlan} when m - b0 < z or r >= w (the last
/// walk would exceed 2w - 1 edges), and kPrecondition when z = 0 or b0 > m.
WalkPlan plan_walks(std::size_t b0, std::size_t z, std::size_t m);

struct ExtensionConfig {
  double alpha = 0.05;
  double beta = 0.3;
  Mode mode = Mode::kStrict;
  std::size_t max_retries = 10000;
};

struct ExtensionStats {
  std::vector<std::size_t> walk_retries;
  EventFailureTally failures;
  std::size_t vertex_repairs = 0;
  std::size_t edge_repairs = 0;
  int final_max_degree = 0;        // Delta_z
  bool degree_below_half_n = true;  // every intermediate G_i had max degree < n/2
  bool walk_count_within_bound = true;  // z <= n^{3/4}
  bool early_finish = false;
};

struct ExtensionCertificate {
  Graph input;
  Graph h;
  std::vector<Edge> marked;
  std::vector<std::vector<Edge>> walks;
  std::vector<Vertex> circuit;  // Eulerian circuit of h, closing edge implicit
  FeasibilityReport feasibility;
  ExtensionStats stats;
};

/// Builds an Eulerian supergraph of `g` with exactly m edges on the same
/// vertex set: feasibility check, marking, walk planning, then one Las Vegas
/// walk per pair, each avoiding everything added so far.
///
/// Deterministic in (g, m, seed, config). Throws ExtensionError with kinds
/// kPrecondition, kHypothesisViolated (strict mode), kBudgetExhausted,
/// kInfeasiblePlan, kRetriesExhausted or kDegreeOverflow (strict mode).
ExtensionCertificate extend(const Graph& g, std::size_t m, std::uint64_t seed,
                            const ExtensionConfig& config = {});

}  // namespace eulext
