#include "eulext/event_trials.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "eulext/edge_list_io.hpp"
#include "eulext/generator.hpp"
#include "eulext/walk_builder.hpp"

namespace eulext {

const EventBound& TrialSummary::event(std::string_view name) const {
  for (const auto& e : events) {
    if (e.event == name) return e;
  }
  throw std::out_of_range("unknown event " + std::string(name));
}

bool TrialSummary::all_within_3_sigma() const noexcept {
  return std::all_of(events.begin(), events.end(), [](const EventBound& e) { return e.within_3_sigma(); });
}

namespace {

Rng trial_stream(std::uint64_t seed, std::size_t trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  return Rng(seq);
}

EventBound bound_for(std::string name, std::size_t hits, std::size_t trials, double analytic) {
  EventBound b;
  b.event = std::move(name);
  b.frequency = trials ? static_cast<double>(hits) / trials : 0.0;
  b.analytic = analytic;
  b.sigma = trials ? std::sqrt(b.frequency * (1.0 - b.frequency) / trials) : 0.0;
  return b;
}

}  // namespace

TrialSummary summarize_trials(std::span<const TrialRecord> records, VertexPair endpoints) {
  TrialSummary s;
  s.trials = records.size();
  s.endpoints = endpoints;
  if (!records.empty()) {
    s.n = records.front().n;
    s.w = records.front().w;
    s.b0 = records.front().b0;
  }
  std::size_t valid = 0, deg = 0, vbad = 0, ebad = 0, joint = 0;
  for (const auto& r : records) {
    valid += r.e_valid;
    deg += r.e_deg;
    vbad += r.e_v_bad;
    ebad += r.e_e_bad;
    joint += r.e_joint;
  }
  const double n = s.n;
  const double inv_n = n > 0 ? 1.0 / n : 0.0;
  const std::size_t t = s.trials;
  s.events.push_back(bound_for("E_valid", valid, t, (0.5 - inv_n) * (0.5 - inv_n)));
  s.events.push_back(bound_for("E_deg", deg, t, 1.0 - inv_n));
  s.events.push_back(bound_for("E_v,bad", vbad, t, 1.0 - 3.0 * inv_n * inv_n));
  s.events.push_back(bound_for("E_e,bad", ebad, t, 1.0 - 1.0 / kBadEdgeFactor));
  s.events.push_back(bound_for("E_joint", joint, t, 1.0 / 21.0));
  return s;
}

TrialRun run_event_trials(const TrialConfig& config) {
  if (config.n < 4) throw std::invalid_argument("event trials need n >= 4");
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const double n = config.n;
  const auto scaled = static_cast<std::size_t>(std::floor(config.alpha * std::pow(n, 1.5)));
  const std::size_t m = std::max<std::size_t>(2 * static_cast<std::size_t>(config.n), scaled);
  const std::size_t b = m - static_cast<std::size_t>(config.n);
  const int cap = std::max(2, static_cast<int>(std::floor(config.beta * n)));
  const Graph g = gen_random_connected_graph(config.n, b, cap, config.seed);

  MarkingOutcome outcome = mark_edges(g, m);
  if (!outcome.finished && outcome.clique_pairs.empty()) outcome = resolve_empty_clique(std::move(outcome));
  const Graph& g0 = outcome.g0;
  const VertexPair endpoints =
      outcome.clique_pairs.empty() ? VertexPair{0, 0} : outcome.clique_pairs.front();
  const std::size_t w = config.w.value_or(std::max<std::size_t>(1, scaled));
  const std::size_t b0 = g0.edge_count();

  std::vector<TrialRecord> records(config.trials);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Rng rng = trial_stream(config.seed, i);
      const WalkSequence seq = sample_sequence(endpoints.first, endpoints.second, w, config.n, rng);
      const EventStats s = evaluate_events(seq, g0, b0);
      records[i] = {config.n, w, b0, i, s.e_valid, s.e_deg, s.e_v_bad, s.e_e_bad, s.e_joint, 0};
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
  if (threads == 1) {
    run_range(0, config.trials);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (config.trials + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(config.trials, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::size_t pending = 0;
  for (auto& r : records) {
    r.retries = pending;
    pending = r.e_joint ? 0 : pending + 1;
  }

  TrialRun run;
  run.summary = summarize_trials(records, endpoints);
  run.records = std::move(records);
  return run;
}

void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << kTrialCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.w << ',' << r.b0 << ',' << r.trial << ',' << int(r.e_valid) << ','
        << int(r.e_deg) << ',' << int(r.e_v_bad) << ',' << int(r.e_e_bad) << ',' << int(r.e_joint)
        << ',' << r.retries << '\n';
  }
}

std::vector<TrialRecord> read_trials_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kTrialCsvHeader) throw ParseError(1, "unexpected CSV header");
  std::vector<TrialRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<long long> fields;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        fields.push_back(std::stoll(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad CSV cell '" + cell + "'");
      }
    }
    if (fields.size() != 10) throw ParseError(line_no, "expected 10 CSV fields");
    TrialRecord r;
    r.n = static_cast<int>(fields[0]);
    r.w = static_cast<std::size_t>(fields[1]);
    r.b0 = static_cast<std::size_t>(fields[2]);
    r.trial = static_cast<std::size_t>(fields[3]);
    r.e_valid = fields[4] != 0;
    r.e_deg = fields[5] != 0;
    r.e_v_bad = fields[6] != 0;
    r.e_e_bad = fields[7] != 0;
    r.e_joint = fields[8] != 0;
    r.retries = static_cast<std::size_t>(fields[9]);
    out.push_back(r);
  }
  return out;
}

}  // namespace eulext
