#include "eulext/extension.hpp"

#include <cmath>
#include <string>

#include "eulext/errors.hpp"
#include "eulext/verify.hpp"

namespace eulext {

std::vector<std::string> FeasibilityReport::violations() const {
  std::vector<std::string> out;
  if (!m_at_least_2n) out.emplace_back("m >= 2n");
  if (!m_at_most_alpha_n32) out.emplace_back("m <= alpha*n^(3/2)");
  if (!delta_at_most_beta_n) out.emplace_back("Delta <= beta*n");
  if (!b_at_most_m_minus_n) out.emplace_back("b <= m-n");
  if (!constants_admissible) out.emplace_back("beta + 40*alpha^2 < 1/2");
  return out;
}

FeasibilityReport check_feasibility(const InstanceStats& instance, std::size_t m, double alpha,
                                    double beta, Mode mode) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0)) {
    throw ExtensionError(ErrorKind::kPrecondition, "alpha and beta must lie in (0,1)");
  }
  const double n = instance.n;
  const double md = static_cast<double>(m);
  FeasibilityReport r;
  r.instance = instance;
  r.m = m;
  r.alpha = alpha;
  r.beta = beta;
  r.mode = mode;
  r.alpha_implied = n > 0 ? md / std::pow(n, 1.5) : 0.0;
  r.beta_implied = n > 0 ? instance.delta / n : 0.0;
  r.m_at_least_2n = md >= 2.0 * n;
  r.m_at_most_alpha_n32 = md <= alpha * std::pow(n, 1.5);
  r.delta_at_most_beta_n = instance.delta <= beta * n;
  r.b_at_most_m_minus_n = static_cast<double>(instance.b) <= md - n;
  r.constants_admissible = beta + 40.0 * alpha * alpha < 0.5;
  return r;
}

FeasibilityReport check_feasibility(const Graph& g, std::size_t m, double alpha, double beta,
                                    Mode mode) {
  return check_feasibility(InstanceStats::of(g), m, alpha, beta, mode);
}

WalkPlan plan_walks(std::size_t b0, std::size_t z, std::size_t m) {
  if (z == 0) throw ExtensionError(ErrorKind::kPrecondition, "walk count must be positive");
  if (b0 > m) throw ExtensionError(ErrorKind::kPrecondition, "b0 exceeds target m");
  const std::size_t remaining = m - b0;
  if (remaining < z) {
    throw ExtensionError(ErrorKind::kInfeasiblePlan,
                         std::to_string(remaining) + " edges cannot cover " + std::to_string(z) +
                             " walks");
  }
  WalkPlan plan;
  plan.z = z;
  plan.w = remaining / z;
  plan.r = remaining - z * plan.w;
  if (plan.r >= plan.w) {
    throw ExtensionError(ErrorKind::kInfeasiblePlan,
                         "remainder " + std::to_string(plan.r) + " not below base length " +
                             std::to_string(plan.w));
  }
  plan.lengths.assign(z, plan.w);
  plan.lengths.back() += plan.r;
  return plan;
}

namespace {

bool below_half(int degree, int n) { return 2 * degree < n; }

}  // namespace

ExtensionCertificate extend(const Graph& g, std::size_t m, std::uint64_t seed,
                            const ExtensionConfig& config) {
  const int n = g.vertex_count();
  if (!is_connected(g)) throw ExtensionError(ErrorKind::kPrecondition, "input graph is disconnected");
  if (m <= g.edge_count()) {
    throw ExtensionError(ErrorKind::kPrecondition, "target m must exceed the input edge count");
  }

  ExtensionCertificate cert;
  cert.input = g;
  cert.feasibility = check_feasibility(g, m, config.alpha, config.beta, config.mode);
  if (config.mode == Mode::kStrict && !cert.feasibility.all_pass()) {
    std::string failed;
    for (const auto& v : cert.feasibility.violations()) failed += (failed.empty() ? "" : ", ") + v;
    throw ExtensionError(ErrorKind::kHypothesisViolated, "failed checks: " + failed);
  }
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (m > max_edges) {
    throw ExtensionError(ErrorKind::kInfeasiblePlan,
                         "m=" + std::to_string(m) + " exceeds the complete graph's " +
                             std::to_string(max_edges) + " edges");
  }

  MarkingOutcome outcome = mark_edges(g, m);
  ExtensionStats& stats = cert.stats;

  if (outcome.finished) {
    cert.h = *outcome.finished;
    cert.marked = outcome.marked;
    stats.early_finish = true;
  } else {
    if (outcome.clique_pairs.empty()) outcome = resolve_empty_clique(std::move(outcome));
    cert.marked = outcome.marked;

    const std::size_t z = outcome.walk_count();
    stats.walk_count_within_bound = static_cast<double>(z) <= std::pow(static_cast<double>(n), 0.75);
    if (config.mode == Mode::kStrict && !stats.walk_count_within_bound) {
      throw ExtensionError(ErrorKind::kHypothesisViolated,
                           "leftover clique gives z=" + std::to_string(z) + " > n^(3/4)");
    }

    const WalkPlan plan = plan_walks(outcome.g0.edge_count(), z, m);
    Rng rng(seed);
    const WalkConfig walk_config{config.max_retries, config.mode == Mode::kStrict};
    Graph acc = outcome.g0;

    for (std::size_t i = 0; i < z; ++i) {
      const VertexPair pair = outcome.clique_pairs[i];
      const std::size_t length = plan.lengths[i];
      std::vector<Edge> walk;

      if (length == 1) {
        // A one-edge walk is the direct edge, available only for a non-adjacent distinct pair.
        if (pair.first == pair.second || acc.has_edge(pair.first, pair.second)) {
          throw ExtensionError(ErrorKind::kInfeasiblePlan,
                               "single-edge walk between " + std::to_string(pair.first) + " and " +
                                   std::to_string(pair.second) + " is not available");
        }
        walk.push_back(Edge::canonical(pair.first, pair.second));
        stats.walk_retries.push_back(0);
      } else {
        WalkResult built =
            build_walk(pair.first, pair.second, length - 1, acc, acc.edge_count(), rng, walk_config);
        stats.walk_retries.push_back(built.retries);
        stats.failures += built.failures;
        stats.vertex_repairs += built.vertex_repairs;
        stats.edge_repairs += built.edge_repairs;
        walk = std::move(built.edges);
      }

      acc = acc.with_edges(walk);
      cert.walks.push_back(std::move(walk));
      if (!below_half(acc.max_degree(), n)) {
        stats.degree_below_half_n = false;
        if (config.mode == Mode::kStrict) {
          throw ExtensionError(ErrorKind::kDegreeOverflow,
                               "max degree " + std::to_string(acc.max_degree()) + " reached n/2 after walk " +
                                   std::to_string(i + 1));
        }
      }
    }
    cert.h = std::move(acc);
  }

  if (cert.h.edge_count() != m || !odd_vertices(cert.h).empty()) {
    throw std::logic_error("assembled extension is not an m-edge Eulerian graph");
  }
  stats.final_max_degree = cert.h.max_degree();
  stats.degree_below_half_n = stats.degree_below_half_n && below_half(stats.final_max_degree, n);
  if (config.mode == Mode::kStrict && !stats.degree_below_half_n) {
    throw ExtensionError(ErrorKind::kDegreeOverflow, "final max degree reached n/2");
  }
  cert.circuit = hierholzer_circuit(cert.h);
  return cert;
}

}  // namespace eulext
