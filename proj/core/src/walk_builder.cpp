#include "eulext/walk_builder.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "eulext/errors.hpp"

namespace eulext {

double compute_a_n(std::int64_t w, int n) {
  return std::max(2.0 * static_cast<double>(w) / n, 100.0 * std::log(static_cast<double>(n)));
}

double compute_c_n(std::int64_t b0, std::int64_t w, int n) {
  const double nn = static_cast<double>(n) * n;
  return 1.0 + 2.0 * static_cast<double>(b0 + w) * static_cast<double>(w) / nn;
}

WalkSequence::WalkSequence(Vertex u1, Vertex u2, std::vector<Vertex> interior) {
  if (interior.empty()) throw ExtensionError(ErrorKind::kPrecondition, "walk interior must be non-empty");
  entries_.reserve(interior.size() + 2);
  entries_.push_back(u1);
  entries_.insert(entries_.end(), interior.begin(), interior.end());
  entries_.push_back(u2);
}

void WalkSequence::set(std::size_t i, Vertex v) {
  if (i == 0 || i > length()) throw std::out_of_range("endpoints of a walk sequence are fixed");
  entries_[i] = v;
}

std::vector<Edge> WalkSequence::edges() const {
  std::vector<Edge> out;
  out.reserve(entries_.size() - 1);
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    out.push_back(Edge::canonical(entries_[i], entries_[i + 1]));
  }
  return out;
}

WalkSequence sample_sequence(Vertex u1, Vertex u2, std::size_t w, int n, Rng& rng) {
  if (n < 1) throw ExtensionError(ErrorKind::kPrecondition, "vertex count must be positive");
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> interior(w);
  for (auto& x : interior) x = pick(rng);
  return WalkSequence(u1, u2, std::move(interior));
}

std::vector<std::size_t> bad_edge_positions(const WalkSequence& seq, const Graph& acc) {
  const auto edges = seq.edges();
  std::unordered_map<std::uint64_t, std::size_t> last;
  last.reserve(edges.size() * 2);
  for (std::size_t l = 0; l < edges.size(); ++l) last[edges[l].key()] = l;

  std::vector<std::size_t> bad;
  for (std::size_t l = 0; l < edges.size(); ++l) {
    const Edge& e = edges[l];
    if (acc.has_edge(e.u, e.v) || last[e.key()] >= l + 2) bad.push_back(l);
  }
  return bad;
}

namespace {

std::size_t count_bad_vertices(const WalkSequence& seq) {
  const std::size_t w = seq.length();
  std::size_t count = 1;  // X_w
  for (std::size_t i = 0; i < w; ++i) {
    if (seq.at(i) == seq.at(i + 1) || seq.at(i) == seq.at(i + 2)) ++count;
  }
  return count;
}

}  // namespace

EventStats evaluate_events(const WalkSequence& seq, const Graph& acc, std::size_t b0) {
  const int n = acc.vertex_count();
  const std::size_t w = seq.length();
  EventStats s;

  std::vector<int> multiplicity(n, 0);
  for (Vertex x : seq.interior()) s.dv_max = std::max(s.dv_max, ++multiplicity[x]);
  s.a_n = compute_a_n(static_cast<std::int64_t>(w), n);
  s.e_deg = s.dv_max <= s.a_n;

  s.n_v_bad = count_bad_vertices(seq);
  s.e_v_bad = static_cast<double>(s.n_v_bad) <= s.a_n + 1.0;

  s.n_e_bad = bad_edge_positions(seq, acc).size();
  s.c_n = compute_c_n(static_cast<std::int64_t>(b0), static_cast<std::int64_t>(w), n);
  s.e_e_bad = static_cast<double>(s.n_e_bad) <= kBadEdgeFactor * s.c_n;

  const Vertex x0 = seq.at(0), x1 = seq.at(1), xw = seq.at(w), xw1 = seq.at(w + 1);
  s.e_valid = x0 != x1 && xw != xw1 && !acc.has_edge(x0, x1) && !acc.has_edge(xw, xw1);

  s.e_joint = s.e_valid && s.e_deg && s.e_v_bad && s.e_e_bad;
  return s;
}

namespace {

// Multiset of the sequence's consecutive pairs plus per-vertex degree in it.
class SequenceIndex {
 public:
  SequenceIndex(const WalkSequence& seq, int n) : degree_(n, 0) {
    counts_.reserve(seq.length() * 2 + 4);
    for (std::size_t l = 0; l + 1 < seq.entries().size(); ++l) add(seq.at(l), seq.at(l + 1));
  }

  void add(Vertex a, Vertex b) {
    ++counts_[Edge::canonical(a, b).key()];
    ++degree_[a];
    ++degree_[b];
  }

  void remove(Vertex a, Vertex b) {
    auto it = counts_.find(Edge::canonical(a, b).key());
    if (it == counts_.end() || it->second == 0) throw std::logic_error("sequence index out of sync");
    if (--it->second == 0) counts_.erase(it);
    --degree_[a];
    --degree_[b];
  }

  bool adjacent(Vertex a, Vertex b) const {
    return counts_.contains(Edge::canonical(a, b).key());
  }

  int degree(Vertex v) const { return degree_[v]; }

 private:
  std::unordered_map<std::uint64_t, int> counts_;
  std::vector<int> degree_;
};

class Repairer {
 public:
  Repairer(const WalkSequence& seq, const Graph& acc, const RepairOptions& options)
      : seq_(seq), acc_(acc), index_(seq, acc.vertex_count()), options_(options) {}

  WalkSequence& sequence() { return seq_; }

  // c lies in the closed neighbourhood of x in acc + sequence.
  bool touches(Vertex x, Vertex c) const {
    return c == x || acc_.has_edge(x, c) || index_.adjacent(x, c);
  }

  template <typename Pred>
  Vertex smallest(Pred&& admissible, const char* what) const {
    for (Vertex c = 0; c < acc_.vertex_count(); ++c) {
      if (admissible(c)) return c;
    }
    throw ExtensionError(ErrorKind::kNoCandidate, std::string("no replacement for ") + what);
  }

  void detach_edge(std::size_t l) { index_.remove(seq_.at(l), seq_.at(l + 1)); }
  void attach_edge(std::size_t l) { index_.add(seq_.at(l), seq_.at(l + 1)); }

  void check_budget(Vertex v) const {
    if (!options_.enforce_degree_budget) return;
    const int total = acc_.degree(v) + index_.degree(v);
    if (2 * total > acc_.vertex_count() - 10) {
      throw ExtensionError(ErrorKind::kNoCandidate,
                           "degree budget n/2 - 5 exceeded at vertex " + std::to_string(v));
    }
  }

  void check_budget_all() const {
    if (!options_.enforce_degree_budget) return;
    for (Vertex v = 0; v < acc_.vertex_count(); ++v) check_budget(v);
  }

 private:
  WalkSequence seq_;
  const Graph& acc_;
  SequenceIndex index_;
  RepairOptions options_;
};

}  // namespace

RepairResult repair_bad_vertices(const WalkSequence& input, const Graph& acc,
                                 const RepairOptions& options) {
  Repairer rep(input, acc, options);
  WalkSequence& seq = rep.sequence();
  const std::size_t w = seq.length();
  std::size_t steps = 0;
  rep.check_budget_all();

  // Each fix at i leaves X_0..X_i good: v1 avoids N[X_i], which holds X_{i-1}.
  for (std::size_t i = 0; i + 2 <= w; ++i) {
    const Vertex x = seq.at(i);
    if (x != seq.at(i + 1) && x != seq.at(i + 2)) continue;

    rep.detach_edge(i);
    rep.detach_edge(i + 1);
    rep.detach_edge(i + 2);
    const Vertex after = seq.at(i + 3);
    const Vertex v1 = rep.smallest(
        [&](Vertex c) { return !rep.touches(x, c) && c != after; }, "bad vertex (first slot)");
    const Vertex v2 = rep.smallest(
        [&](Vertex c) { return c != x && !rep.touches(v1, c) && !rep.touches(after, c); },
        "bad vertex (second slot)");
    seq.set(i + 1, v1);
    seq.set(i + 2, v2);
    rep.attach_edge(i);
    rep.attach_edge(i + 1);
    rep.attach_edge(i + 2);
    rep.check_budget(v1);
    rep.check_budget(v2);
    ++steps;
  }

  // X_{w-1} = u2 cannot be fixed by rewriting later entries; rewrite it instead.
  const Vertex u2 = seq.u2();
  if (seq.at(w - 1) == u2) {
    if (w < 2) throw ExtensionError(ErrorKind::kNoCandidate, "closed walk too short");
    rep.detach_edge(w - 2);
    rep.detach_edge(w - 1);
    const Vertex before = seq.at(w - 2);
    const Vertex c = rep.smallest([&](Vertex c) { return !rep.touches(before, c) && c != u2; },
                                  "tail entry X_{w-1}");
    seq.set(w - 1, c);
    rep.attach_edge(w - 2);
    rep.attach_edge(w - 1);
    rep.check_budget(c);
    ++steps;
  }

  // X_w is always rewritten.
  rep.detach_edge(w - 1);
  rep.detach_edge(w);
  const Vertex prev = seq.at(w - 1);
  const Vertex tail = rep.smallest(
      [&](Vertex c) { return !rep.touches(prev, c) && !rep.touches(u2, c); }, "tail entry X_w");
  seq.set(w, tail);
  rep.attach_edge(w - 1);
  rep.attach_edge(w);
  rep.check_budget(tail);
  ++steps;

  return {std::move(seq), steps};
}

RepairResult repair_bad_edges(const WalkSequence& input, const Graph& acc,
                              const RepairOptions& options) {
  const std::size_t w = input.length();
  for (std::size_t i = 0; i <= w; ++i) {
    const bool loop = input.at(i) == input.at(i + 1);
    const bool skip = i < w && input.at(i) == input.at(i + 2);
    if (loop || skip) {
      throw ExtensionError(ErrorKind::kPrecondition,
                           "bad vertex at position " + std::to_string(i) + " before edge repair");
    }
  }

  Repairer rep(input, acc, options);
  WalkSequence& seq = rep.sequence();
  std::size_t steps = 0;
  // Each round removes at least the lowest bad edge and creates none.
  const std::size_t cap = 2 * (w + 2);
  while (true) {
    const auto bad = bad_edge_positions(seq, acc);
    if (bad.empty()) break;
    const std::size_t l = bad.front();
    if (l == w) throw ExtensionError(ErrorKind::kNoCandidate, "final edge into fixed endpoint is bad");
    if (steps >= cap) throw std::logic_error("bad-edge repair failed to converge");

    rep.detach_edge(l);
    rep.detach_edge(l + 1);
    const Vertex left = seq.at(l), right = seq.at(l + 2);
    const Vertex y = rep.smallest(
        [&](Vertex c) { return !rep.touches(left, c) && !rep.touches(right, c); }, "bad edge");
    seq.set(l + 1, y);
    rep.attach_edge(l);
    rep.attach_edge(l + 1);
    rep.check_budget(y);
    ++steps;
  }
  return {std::move(seq), steps};
}

EventFailureTally& EventFailureTally::operator+=(const EventFailureTally& o) {
  valid += o.valid;
  deg += o.deg;
  v_bad += o.v_bad;
  e_bad += o.e_bad;
  no_candidate += o.no_candidate;
  return *this;
}

std::string EventFailureTally::dominant() const {
  const std::pair<std::size_t, const char*> entries[] = {
      {valid, "E_valid"}, {deg, "E_deg"}, {v_bad, "E_v,bad"}, {e_bad, "E_e,bad"},
      {no_candidate, "no-candidate"}};
  const auto* best = std::max_element(std::begin(entries), std::end(entries),
                                      [](auto& a, auto& b) { return a.first < b.first; });
  return best->first == 0 ? "none" : best->second;
}

namespace {

void check_walk(const WalkSequence& seq, const Graph& acc) {
  const auto edges = seq.edges();
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::logic_error("repaired walk repeats an edge");
  }
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::logic_error("repaired walk has a self-loop");
    if (acc.has_edge(e.u, e.v)) throw std::logic_error("repaired walk reuses an accumulated edge");
  }
}

}  // namespace

WalkResult build_walk(Vertex u1, Vertex u2, std::size_t w, const Graph& acc, std::size_t b0,
                      Rng& rng, const WalkConfig& config) {
  const int n = acc.vertex_count();
  if (w < 1) throw ExtensionError(ErrorKind::kPrecondition, "walk interior length must be >= 1");
  if (u1 < 0 || u2 < 0 || u1 >= n || u2 >= n) {
    throw ExtensionError(ErrorKind::kPrecondition, "walk endpoint out of range");
  }
  if (u1 == u2 && w < 2) {
    throw ExtensionError(ErrorKind::kInfeasiblePlan, "closed walk needs at least 3 edges");
  }

  const RepairOptions options{config.enforce_degree_budget};
  EventFailureTally failures;
  for (std::size_t attempt = 0; attempt < config.max_retries; ++attempt) {
    WalkSequence seq = sample_sequence(u1, u2, w, n, rng);
    const EventStats stats = evaluate_events(seq, acc, b0);
    if (!stats.e_joint) {
      failures.valid += !stats.e_valid;
      failures.deg += !stats.e_deg;
      failures.v_bad += !stats.e_v_bad;
      failures.e_bad += !stats.e_e_bad;
      continue;
    }

    RepairResult vertices_fixed{seq, 0};
    RepairResult edges_fixed{seq, 0};
    try {
      vertices_fixed = repair_bad_vertices(seq, acc, options);
      edges_fixed = repair_bad_edges(vertices_fixed.sequence, acc, options);
    } catch (const ExtensionError& e) {
      if (e.kind() != ErrorKind::kNoCandidate) throw;
      ++failures.no_candidate;
      continue;
    }

    const WalkSequence& walk = edges_fixed.sequence;
    check_walk(walk, acc);

    WalkResult result;
    result.vertices.assign(walk.entries().begin(), walk.entries().end());
    result.edges = walk.edges();
    result.retries = attempt;
    result.vertex_repairs = vertices_fixed.steps;
    result.edge_repairs = edges_fixed.steps;
    result.accepted_stats = stats;
    result.failures = failures;

    // Each repair round places any given vertex at most once, adding at most 2
    // to its degree; the sample itself contributes 2 per occurrence plus endpoints.
    std::vector<int> walk_degree(n, 0);
    for (const Edge& e : result.edges) {
      ++walk_degree[e.u];
      ++walk_degree[e.v];
    }
    const long bound = acc.max_degree() + 2L * stats.dv_max + 2 +
                       2L * static_cast<long>(result.vertex_repairs + result.edge_repairs);
    for (Vertex v = 0; v < n; ++v) {
      if (acc.degree(v) + walk_degree[v] > bound) {
        throw std::logic_error("walk degree accounting bound violated at vertex " + std::to_string(v));
      }
    }
    return result;
  }

  throw ExtensionError(ErrorKind::kRetriesExhausted,
                       "no valid walk " + std::to_string(u1) + "->" + std::to_string(u2) +
                           " of " + std::to_string(w + 1) + " edges after " +
                           std::to_string(config.max_retries) + " samples (most frequent failure: " +
                           failures.dominant() + "; valid=" + std::to_string(failures.valid) +
                           " deg=" + std::to_string(failures.deg) +
                           " v_bad=" + std::to_string(failures.v_bad) +
                           " e_bad=" + std::to_string(failures.e_bad) +
                           " no_candidate=" + std::to_string(failures.no_candidate) + ")");
}

}  // namespace eulext
