// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "eulext/chernoff.hpp"
#include "eulext/errors.hpp"
#include "eulext/event_trials.hpp"
#include "eulext/extension.hpp"
#include "eulext/generator.hpp"
#include "eulext/verify.hpp"

using namespace eulext;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failed_criteria = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", title, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed_criteria;
}

// Soundness at n in {100, 200, 400}, plus degree and walk-count budgets on
// every accepted run.
void soundness_and_degree_budget() {
  const auto t0 = Clock::now();
  constexpr int kInstances = 100;
  std::size_t runs = 0, verified = 0, within_time = 0, degree_ok = 0, walks_ok = 0;
  double slowest = 0.0;
  std::string first_problem;

  for (const int n : {100, 200, 400}) {
    const std::size_t m = std::max<std::size_t>(2 * n, static_cast<std::size_t>(std::floor(0.05 * std::pow(n, 1.5))));
    const int cap = static_cast<int>(std::floor(0.3 * n));
    std::mt19937_64 pick(static_cast<std::uint64_t>(n));
    for (int i = 0; i < kInstances; ++i) {
      const std::size_t lo = n - 1, hi = m - n;
      const std::size_t b = lo + pick() % (hi - lo + 1);
      const std::uint64_t seed = 1000ULL * n + i;
      ++runs;
      const auto t = Clock::now();
      try {
        const Graph g = gen_random_connected_graph(n, b, cap, seed);
        ExtensionConfig config;
        config.mode = Mode::kAdvisory;
        const auto cert = extend(g, m, seed, config);
        const auto rep = verify_extension(g, cert.h, m);
        const double dt = seconds_since(t);
        slowest = std::max(slowest, dt);
        if (rep.pass()) ++verified;
        if (dt < 5.0) ++within_time;

        const std::size_t z = cert.walks.size();
        if (2 * cert.h.max_degree() < n && cert.stats.final_max_degree == cert.h.max_degree()) ++degree_ok;
        if (static_cast<double>(z) <= std::pow(n, 0.75)) ++walks_ok;
        if (!rep.pass() && first_problem.empty()) {
          first_problem = "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": " + rep.failures.front();
        }
      } catch (const std::exception& e) {
        slowest = std::max(slowest, seconds_since(t));
        if (first_problem.empty()) {
          first_problem = "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": " + e.what();
        }
      }
    }
  }

  std::string detail = std::to_string(verified) + "/" + std::to_string(runs) + " verified, " +
                       std::to_string(within_time) + "/" + std::to_string(runs) + " under 5 s (slowest " +
                       std::to_string(slowest) + " s), total " + std::to_string(seconds_since(t0)) + " s";
  if (!first_problem.empty()) detail += "; first problem: " + first_problem;
  report(1, "end-to-end soundness", verified == runs && within_time == runs, detail);

  report(4, "degree budget", degree_ok == runs && walks_ok == runs,
         "Delta_z < n/2 on " + std::to_string(degree_ok) + "/" + std::to_string(runs) +
             " runs, z <= n^(3/4) on " + std::to_string(walks_ok) + "/" + std::to_string(runs));
}

std::uint32_t pair_bit(int u, int v, int n) {
  // Index of (u, v), u < v, in the lexicographic list of pairs.
  return static_cast<std::uint32_t>(u * n - u * (u + 1) / 2 + (v - u - 1));
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (mask >> pair_bit(u, v, n) & 1U) pairs.emplace_back(u, v);
  return Graph::from_edge_list(n, pairs);
}

// Canonical label: smallest mask over all vertex relabellings.
std::uint32_t canonical_mask(int n, std::uint32_t mask, const std::vector<std::array<int, 6>>& perms) {
  std::uint32_t best = UINT32_MAX;
  for (const auto& p : perms) {
    std::uint32_t image = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (mask >> pair_bit(u, v, n) & 1U) {
          const int a = std::min(p[u], p[v]), b = std::max(p[u], p[v]);
          image |= 1U << pair_bit(a, b, n);
        }
    best = std::min(best, image);
  }
  return best;
}

// Every connected labelled graph for n <= 5 and one graph per isomorphism
// class for n = 6; every m with b < m <= 15.
void oracle_equivalence() {
  const auto t0 = Clock::now();
  std::size_t graphs = 0, cases = 0, certificates = 0, false_positives = 0, unverified = 0, oracle_yes = 0;
  ExtensionConfig config;
  config.mode = Mode::kAdvisory;
  config.max_retries = 2000;

  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::array<int, 6>> perms;
    if (n == 6) {
      std::array<int, 6> p{0, 1, 2, 3, 4, 5};
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      if (n == 6 && !seen.insert(canonical_mask(n, mask, perms)).second) continue;
      const Graph g = graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      ++graphs;
      for (std::size_t m = g.edge_count() + 1; m <= 15; ++m) {
        ++cases;
        const auto witness = brute_force_extendable(g, m);
        if (witness) ++oracle_yes;
        try {
          const auto cert = extend(g, m, mask * 97ULL + m, config);
          ++certificates;
          if (!witness) ++false_positives;
          if (!verify_extension(g, cert.h, m).pass()) ++unverified;
        } catch (const ExtensionError&) {
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  report(2, "oracle equivalence", false_positives == 0 && unverified == 0 && dt < 600.0,
         std::to_string(graphs) + " graphs, " + std::to_string(cases) + " (G, m) cases, " +
             std::to_string(certificates) + " certificates, oracle witnesses " + std::to_string(oracle_yes) +
             ", false positives " + std::to_string(false_positives) + ", failed verifications " +
             std::to_string(unverified) + ", " + std::to_string(dt) + " s");
}

void event_probability_bounds() {
  const auto t0 = Clock::now();
  TrialConfig config;
  config.n = 1000;
  config.trials = 2000;
  config.seed = 2024;
  config.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto run = run_event_trials(config);
  const double dt = seconds_since(t0);

  bool pass = dt < 120.0;
  std::string detail = "w=" + std::to_string(run.summary.w) + " b0=" + std::to_string(run.summary.b0);
  for (const auto& e : run.summary.events) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "; %s %.4f vs %.4f (3sigma %.4f)", e.event.c_str(), e.frequency, e.analytic,
                  3.0 * e.sigma);
    detail += buf;
    if (e.event != "E_valid") pass = pass && e.within_3_sigma();
  }
  detail += "; " + std::to_string(dt) + " s";
  report(3, "event probability bounds", pass, detail);
}

void walk_plan_arithmetic() {
  std::mt19937_64 rng(99);
  constexpr int kTriples = 10000;
  int ok = 0, rejected = 0;
  std::string first_problem;
  for (int i = 0; i < kTriples; ++i) {
    const std::size_t b0 = rng() % 1000000;
    const std::size_t z = 1 + rng() % 2000;
    std::size_t m;
    if (i % 2 == 0) {
      // Admissible by construction: z walks of length w plus a remainder r < w.
      const std::size_t w = 1 + rng() % 5000;
      m = b0 + z * w + rng() % w;
    } else {
      m = b0 + rng() % 5000000;
    }
    const std::size_t budget = m - b0;
    const std::size_t w = budget / z, r = budget % z;
    const bool admissible = budget >= z && r < w;
    bool good;
    try {
      const WalkPlan plan = plan_walks(b0, z, m);
      std::size_t sum = 0;
      for (const auto len : plan.lengths) sum += len;
      const bool equal_prefix = std::all_of(plan.lengths.begin(), plan.lengths.end() - 1,
                                            [&](std::size_t len) { return len == plan.w; });
      good = admissible && plan.lengths.size() == z && plan.z == z && plan.w == w && plan.r == r &&
             sum == budget && plan.lengths.back() <= 2 * plan.w && plan.lengths.back() == w + r && equal_prefix;
    } catch (const ExtensionError& e) {
      ++rejected;
      good = !admissible && e.kind() == ErrorKind::kInfeasiblePlan;
    }
    if (good) {
      ++ok;
    } else if (first_problem.empty()) {
      first_problem = "b0=" + std::to_string(b0) + " z=" + std::to_string(z) + " m=" + std::to_string(m);
    }
  }
  std::string detail = std::to_string(ok) + "/" + std::to_string(kTriples) + " exact (" + std::to_string(rejected) +
                       " correctly rejected as infeasible)";
  if (!first_problem.empty()) detail += "; first problem: " + first_problem;
  report(5, "walk plan arithmetic", ok == kTriples, detail);
}

void chernoff_utility() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_mu(-3.0, 4.0);
  std::uniform_real_distribution<double> eps_dist(0.0, 0.5);
  constexpr int kPairs = 1000;
  int ok = 0;
  double worst = 0.0;
  for (int i = 0; i < kPairs; ++i) {
    const double mu = i % 10 == 0 ? 0.0 : std::pow(10.0, log_mu(rng));
    double eps = eps_dist(rng);
    while (eps <= 0.0) eps = eps_dist(rng);
    const long double expected =
        std::min<long double>(1.0L, 2.0L * std::exp(-static_cast<long double>(eps) * eps * mu / 4.0L));
    const long double got = chernoff_bound(mu, eps);
    const long double rel = std::fabs(got - expected) / expected;
    worst = std::max(worst, static_cast<double>(rel));
    if (rel <= 1e-12L) ++ok;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d/%d pairs within relative error 1e-12 (worst %.3e)", ok, kPairs, worst);
  report(6, "chernoff utility", ok == kPairs, buf);
}

}  // namespace

int main() {
  soundness_and_degree_budget();
  oracle_equivalence();
  event_probability_bounds();
  walk_plan_arithmetic();
  chernoff_utility();
  std::printf("%s: %d criterion(s) failed\n", failed_criteria == 0 ? "ACCEPTED" : "REJECTED", failed_criteria);
  return failed_criteria == 0 ? 0 : 1;
}
