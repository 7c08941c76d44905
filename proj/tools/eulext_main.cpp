// eulext: command-line front end for the Eulerian extension library.
//
// Exit codes: 0 success, 1 usage, I/O or input-format error, 2 infeasible instance
// (or failed verification / non-Eulerian input).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "eulext/chernoff.hpp"
#include "eulext/edge_list_io.hpp"
#include "eulext/errors.hpp"
#include "eulext/event_trials.hpp"
#include "eulext/extension.hpp"
#include "eulext/generator.hpp"
#include "eulext/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInfeasible = 2;

using eulext::ExtensionError;

template <typename Fn>
int guarded(Fn&& body) {
  try {
    return body();
  } catch (const ExtensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const eulext::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const eulext::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const eulext::GraphError& e) {
    std::cerr << "invalid graph: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitIo;
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct ExtendArgs {
  std::string input;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  double beta = 0.3;
  std::string mode = "strict";
  std::size_t max_retries = 10000;
  std::string out;
};

int run_extend(const ExtendArgs& a) {
  return guarded([&] {
    const eulext::Graph g = eulext::load_graph(a.input);
    eulext::ExtensionConfig config;
    config.alpha = a.alpha;
    config.beta = a.beta;
    config.mode = a.mode == "advisory" ? eulext::Mode::kAdvisory : eulext::Mode::kStrict;
    config.max_retries = a.max_retries;

    const auto cert = eulext::extend(g, a.m, a.seed, config);
    for (const auto& v : cert.feasibility.violations()) std::cerr << "advisory: violated " << v << '\n';
    const std::string text = eulext::serialize_certificate(cert);
    if (a.out.empty()) {
      std::cout << text;
    } else {
      eulext::write_text_file(a.out, text);
    }
    return kExitOk;
  });
}

int run_verify(const std::string& input, const std::string& extension, std::size_t m) {
  return guarded([&] {
    const eulext::Graph g = eulext::load_graph(input);
    const eulext::Graph h = eulext::load_graph(extension);
    const auto report = eulext::verify_extension(g, h, m);
    std::cout << "edge_count_ok " << yes_no(report.edge_count_ok) << '\n'
              << "contains_g " << yes_no(report.contains_g) << '\n'
              << "connected " << yes_no(report.connected) << '\n'
              << "all_even " << yes_no(report.all_even) << '\n'
              << "circuit_ok " << yes_no(report.circuit_ok) << '\n';
    for (const auto& f : report.failures) std::cout << "# " << f << '\n';
    std::cout << (report.pass() ? "PASS" : "FAIL") << '\n';
    return report.pass() ? kExitOk : kExitInfeasible;
  });
}

int run_circuit(const std::string& input) {
  return guarded([&] {
    const eulext::Graph g = eulext::load_graph(input);
    if (!eulext::is_connected(g)) {
      std::cout << "not-eulerian\n";
      return kExitInfeasible;
    }
    std::vector<eulext::Vertex> circuit;
    try {
      circuit = eulext::hierholzer_circuit(g);
    } catch (const ExtensionError& e) {
      if (e.kind() != eulext::ErrorKind::kNotEulerian) throw;
      std::cout << "not-eulerian\n";
      return kExitInfeasible;
    }
    for (std::size_t i = 0; i < circuit.size(); ++i) std::cout << (i ? " " : "") << circuit[i];
    std::cout << '\n';
    return kExitOk;
  });
}

int run_gen(int n, std::size_t b, int delta_cap, std::uint64_t seed, const std::string& out) {
  return guarded([&] {
    const auto g = eulext::gen_random_connected_graph(n, b, delta_cap, seed);
    eulext::write_text_file(out, eulext::serialize_edge_list(g));
    return kExitOk;
  });
}

int run_experiment(int n, std::size_t trials, std::uint64_t seed, double alpha, const std::string& csv) {
  return guarded([&] {
    eulext::TrialConfig config;
    config.n = n;
    config.trials = trials;
    config.seed = seed;
    config.alpha = alpha;
    config.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto run = eulext::run_event_trials(config);

    std::ofstream file(csv);
    if (!file) throw eulext::IoError("cannot open " + csv + " for writing");
    eulext::write_trials_csv(file, run.records);
    if (!file) throw eulext::IoError("error writing " + csv);

    const auto& s = run.summary;
    std::cout << "n=" << s.n << " w=" << s.w << " b0=" << s.b0 << " trials=" << s.trials
              << " endpoints=" << s.endpoints.first << "," << s.endpoints.second << '\n';
    std::cout << std::left << std::setw(9) << "event" << std::right << std::setw(12) << "empirical"
              << std::setw(12) << "bound" << std::setw(12) << "3sigma" << "  verdict\n";
    for (const auto& e : s.events) {
      std::cout << std::left << std::setw(9) << e.event << std::right << std::fixed
                << std::setprecision(6) << std::setw(12) << e.frequency << std::setw(12)
                << e.analytic << std::setw(12) << 3.0 * e.sigma << "  "
                << (e.within_3_sigma() ? "ok" : "BELOW") << '\n';
    }
    // Deviation bound for one vertex count D_v, whose mean is w/n.
    const double mu = static_cast<double>(s.w) / s.n;
    std::cout << "chernoff P(|D_v - w/n| >= 0.4 w/n) <= " << std::scientific
              << eulext::chernoff_bound(mu, 0.4) << '\n';
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-constrained Eulerian extension solver"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  ExtendArgs ext;
  auto* extend_cmd = app.add_subcommand("extend", "Extend a graph to an Eulerian graph with exactly m edges");
  extend_cmd->add_option("--input", ext.input, "Edge-list file of G")->required();
  extend_cmd->add_option("--m", ext.m, "Target edge count")->required();
  extend_cmd->add_option("--seed", ext.seed, "Random seed")->required();
  extend_cmd->add_option("--alpha", ext.alpha, "Constant alpha in (0,1)");
  extend_cmd->add_option("--beta", ext.beta, "Constant beta in (0,1)");
  extend_cmd->add_option("--mode", ext.mode, "strict or advisory")->check(CLI::IsMember({"strict", "advisory"}));
  extend_cmd->add_option("--max-retries", ext.max_retries, "Samples per walk before giving up");
  extend_cmd->add_option("--out", ext.out, "Certificate output file (stdout if omitted)");
  extend_cmd->callback([&] { exit_code = run_extend(ext); });

  std::string verify_input, verify_ext;
  std::size_t verify_m = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check that H is an Eulerian extension of G with m edges");
  verify_cmd->add_option("--input", verify_input, "Edge-list file of G")->required();
  verify_cmd->add_option("--extension", verify_ext, "Edge-list file of H")->required();
  verify_cmd->add_option("--m", verify_m, "Expected edge count of H")->required();
  verify_cmd->callback([&] { exit_code = run_verify(verify_input, verify_ext, verify_m); });

  std::string circuit_input;
  auto* circuit_cmd = app.add_subcommand("circuit", "Print an Eulerian circuit");
  circuit_cmd->add_option("--input", circuit_input, "Edge-list file")->required();
  circuit_cmd->callback([&] { exit_code = run_circuit(circuit_input); });

  int gen_n = 0, gen_cap = 0;
  std::size_t gen_b = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random connected graph");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->required();
  gen_cmd->add_option("--b", gen_b, "Edge count")->required();
  gen_cmd->add_option("--delta-cap", gen_cap, "Maximum degree")->required();
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen_out, "Output edge-list file")->required();
  gen_cmd->callback([&] { exit_code = run_gen(gen_n, gen_b, gen_cap, gen_seed, gen_out); });

  int exp_n = 0;
  std::size_t exp_trials = 0;
  std::uint64_t exp_seed = 0;
  double exp_alpha = 0.05;
  std::string exp_csv;
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo estimate of the walk acceptance events");
  exp_cmd->add_option("--n", exp_n, "Vertex count")->required();
  exp_cmd->add_option("--trials", exp_trials, "Number of sampled sequences")->required();
  exp_cmd->add_option("--seed", exp_seed, "Master seed")->required();
  exp_cmd->add_option("--alpha", exp_alpha, "Walk length scale: w = floor(alpha n^{3/2})");
  exp_cmd->add_option("--csv", exp_csv, "Per-trial CSV output")->required();
  exp_cmd->callback([&] { exit_code = run_experiment(exp_n, exp_trials, exp_seed, exp_alpha, exp_csv); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitIo;
  }
  return exit_code;
}
