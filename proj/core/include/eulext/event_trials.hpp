#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulext/pairing.hpp"

namespace eulext {

/// One sampled sequence and its event indicators.
struct TrialRecord {
  int n = 0;
  std::size_t w = 0;
  std::size_t b0 = 0;
  std::size_t trial = 0;
  bool e_valid = false;
  bool e_deg = false;
  bool e_v_bad = false;
  bool e_e_bad = false;
  bool e_joint = false;
  /// Rejected samples since the previous E_joint success (what a Las Vegas
  /// loop fed this stream would have discarded before this trial).
  std::size_t retries = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

inline constexpr const char* kTrialCsvHeader = "n,w,b0,trial,e_valid,e_deg,e_v_bad,e_e_bad,e_joint,retries";

/// Empirical frequency of one event against its analytic lower bound.
struct EventBound {
  std::string event;
  double frequency = 0.0;
  double analytic = 0.0;
  double sigma = 0.0;  // binomial standard error sqrt(p(1-p)/trials) at the empirical p

  /// frequency >= analytic - 3 sigma
  bool within_3_sigma() const noexcept { return frequency >= analytic - 3.0 * sigma; }
};

struct TrialSummary {
  int n = 0;
  std::size_t w = 0;
  std::size_t b0 = 0;
  std::size_t trials = 0;
  VertexPair endpoints;
  std::vector<EventBound> events;  // E_valid, E_deg, E_v,bad, E_e,bad, E_joint

  const EventBound& event(std::string_view name) const;
  bool all_within_3_sigma() const noexcept;
};

struct TrialConfig {
  int n = 1000;
  std::size_t trials = 2000;
  std::uint64_t seed = 1;
  double alpha = 0.05;
  double beta = 0.3;
  /// Interior length; defaults to floor(alpha * n^{3/2}).
  std::optional<std::size_t> w;
  unsigned threads = 1;
};

struct TrialRun {
  std::vector<TrialRecord> records;
  TrialSummary summary;
};

/// Builds one instance (m = max(2n, floor(alpha n^{3/2})), b = m - n,
/// degree cap floor(beta n)), marks it to obtain G0 and the first walk pair,
/// then samples `trials` sequences against G0. Trial i draws from a stream
/// seeded by (seed, i), so results do not depend on `threads`.
TrialRun run_event_trials(const TrialConfig& config);

/// Frequencies are means of the per-record indicators.
TrialSummary summarize_trials(std::span<const TrialRecord> records, VertexPair endpoints = {});

void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records);
/// Throws ParseError on a malformed row or header.
std::vector<TrialRecord> read_trials_csv(std::istream& in);

}  // namespace eulext
