// Copyright 2026 The oimcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oimcut/cli.hpp"
#include "oimcut/coupling.hpp"
#include "oimcut/graph.hpp"
#include "oimcut/ising.hpp"

namespace oimcut::cli {

using nlohmann::ordered_json;

namespace {

/// Raised for problems the user can fix by changing the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double default_mu(const std::string& coupling) { return coupling == "cos" ? 1.0 : 0.0; }

std::map<std::string, std::string> parse_params(std::string_view text) {
  std::map<std::string, std::string> params;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("generator parameter '" + std::string(item) + "' is not key=value");
    }
    params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return params;
}

template <class T>
T param_as(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw UsageError("generator parameter '" + key + "' is missing");
  T value{};
  const std::string& s = it->second;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("generator parameter '" + key + "' has invalid value '" + s + "'");
  }
  return value;
}

/// A path to an edge-list file, or "er:n=..,p=..,seed=..", "cubic:n=..,seed=.."
/// or "hypercube:d=..".
Graph load_graph(const std::string& source) {
  const std::size_t colon = source.find(':');
  if (colon != std::string::npos && !std::filesystem::exists(source)) {
    const std::string kind = source.substr(0, colon);
    const auto params = parse_params(std::string_view(source).substr(colon + 1));
    if (kind == "er") {
      return gen_erdos_renyi(param_as<std::size_t>(params, "n"), param_as<double>(params, "p"),
                             param_as<std::uint64_t>(params, "seed"));
    }
    if (kind == "cubic") {
      return gen_random_cubic(param_as<std::size_t>(params, "n"),
                              param_as<std::uint64_t>(params, "seed"));
    }
    if (kind == "hypercube") return gen_hypercube(param_as<unsigned>(params, "d"));
    throw UsageError("unknown generator '" + kind + "'");
  }
  std::ifstream probe(source);
  if (!probe) throw UsageError("cannot read graph file '" + source + "'");
  return read_edge_list_file(source);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  unsigned d = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  Graph g = [&] {
    if (a.kind == "er") return gen_erdos_renyi(a.n, a.p, a.seed);
    if (a.kind == "cubic") return gen_random_cubic(a.n, a.seed);
    return gen_hypercube(a.d);
  }();
  if (a.out.empty()) {
    out << write_edge_list(g) << '\n';
  } else {
    write_edge_list_file(g, a.out);
    out << "n " << g.num_vertices() << "\nedges " << g.num_edges() << '\n';
  }
  return kExitOk;
}

// solve ---------------------------------------------------------------------

struct SolveArgs {
  RunConfig cfg;
  std::optional<double> mu;
  std::size_t threads = 0;
};

int cmd_solve(SolveArgs a, std::ostream& out, std::ostream& err) {
  RunConfig& cfg = a.cfg;
  cfg.mu = a.mu.value_or(default_mu(cfg.coupling));
  cfg.validate();
  SolveOptions opts = cfg.to_solve_options();
  opts.threads = a.threads;
  const Graph g = load_graph(cfg.graph_source);

  const SolveResult result = solve_maxcut(g, opts);
  emit(cfg.output_path, solve_result_to_json(cfg, g, result).dump(2) + "\n", out);

  if (!cfg.trajectory_path.empty()) {
    const RestartResult& r = result.restarts.at(cfg.trajectory_restart);
    write_text(cfg.trajectory_path, trajectory_csv(*r.trajectory));
    write_text(cfg.trajectory_path + ".json", trajectory_metadata(cfg, r).dump(2) + "\n");
  }
  if (result.all_failed()) {
    err << "error: every restart ended in step-failure\n";
    return kExitRuntime;
  }
  return kExitOk;
}

// oracle --------------------------------------------------------------------

int cmd_oracle(const std::string& source, const std::string& out_path, std::ostream& out) {
  const Graph g = load_graph(source);
  if (g.num_vertices() > kBruteForceMaxVertices) {
    throw UsageError("oracle supports at most " + std::to_string(kBruteForceMaxVertices) +
                     " vertices");
  }
  const MaxCutSolution s = brute_force_maxcut(g);
  const ordered_json doc{
      {"graph_source", source},
      {"n", g.num_vertices()},
      {"m", g.num_edges()},
      {"W_mc", s.value},
      {"spins", s.spins.values()},
      {"unique", s.unique},
      {"num_maximizers", s.num_maximizers},
  };
  emit(out_path, doc.dump(2) + "\n", out);
  return kExitOk;
}

// ratio ---------------------------------------------------------------------

int cmd_ratio(const std::string& coupling, std::optional<double> lo, std::optional<double> hi,
              std::ostream& out) {
  if (lo.has_value() != hi.has_value()) throw UsageError("--lo and --hi go together");
  const CouplingFunction f = parse_coupling(coupling);
  ordered_json doc{{"coupling", f.name()}, {"approximation_ratio", approximation_ratio(f)}};
  if (lo) {
    const double r = ratio_over_interval(f, *lo, *hi);
    doc["interval"] = {*lo, *hi};
    doc["ratio_over_interval"] = std::isfinite(r) ? ordered_json(r) : ordered_json();
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

// bench ---------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> graphs;
  std::size_t er_n = 0;
  double er_p = 0.0;
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> couplings;
  std::vector<double> mus;
  RunConfig base;
  std::size_t threads = 0;
  std::string out;
};

int cmd_bench(BenchArgs a, std::ostream& out) {
  std::vector<std::string> sources = a.graphs;
  if (a.instances > 0) {
    if (a.er_n == 0) throw UsageError("--instances needs --er-n and --er-p");
    for (std::size_t i = 0; i < a.instances; ++i) {
      sources.push_back("er:n=" + std::to_string(a.er_n) + ",p=" + format_double(a.er_p) +
                        ",seed=" + std::to_string(a.seed + i));
    }
  }
  if (sources.empty()) throw UsageError("bench needs --graph or --instances");
  if (a.couplings.empty()) a.couplings.push_back("cos");

  std::string csv =
      "instance,n,m,coupling,mu,restarts,best_cut,mean_cut,binarization_rate,wall_time_s,"
      "config_hash\n";
  for (const std::string& source : sources) {
    const Graph g = load_graph(source);
    for (const std::string& coupling : a.couplings) {
      const std::vector<double> mus =
          a.mus.empty() ? std::vector<double>{default_mu(coupling)} : a.mus;
      for (double mu : mus) {
        RunConfig cfg = a.base;
        cfg.graph_source = source;
        cfg.coupling = coupling;
        cfg.mu = mu;
        SolveOptions opts = cfg.to_solve_options();
        opts.threads = a.threads;

        const auto start = std::chrono::steady_clock::now();
        const SolveResult result = solve_maxcut(g, opts);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        double sum = 0.0;
        std::size_t binarized = 0;
        for (const RestartResult& r : result.restarts) {
          sum += r.cut;
          binarized += r.binarization.all_binarized ? 1 : 0;
        }
        const double count = static_cast<double>(result.restarts.size());
        std::ostringstream row;
        row << source << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << coupling
            << ',' << format_double(mu) << ',' << cfg.restarts << ','
            << format_double(result.best_restart().cut) << ',' << format_double(sum / count)
            << ',' << format_double(static_cast<double>(binarized) / count) << ','
            << format_double(wall) << ',' << cfg.hash() << '\n';
        csv += row.str();
      }
    }
  }
  emit(a.out, csv, out);
  return kExitOk;
}

void add_tolerance_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--K", cfg.k_coupling, "coupling gain")->capture_default_str();
  cmd->add_option("--rtol", cfg.rtol, "relative tolerance")->capture_default_str();
  cmd->add_option("--atol", cfg.atol, "absolute tolerance")->capture_default_str();
  cmd->add_option("--grad-tol", cfg.grad_tol, "stop when the field's max-norm drops below")
      ->capture_default_str();
  cmd->add_option("--t-max", cfg.t_max, "integration time limit")->capture_default_str();
  cmd->add_option("--restarts", cfg.restarts, "number of seeded restarts")->capture_default_str();
  cmd->add_option("--lines", cfg.rounding_lines, "random lines per restart")
      ->capture_default_str();
  cmd->add_option("--eps", cfg.eps, "binarization tolerance in radians")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillator Ising machine max-cut solver", "oimcut"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "write a random or structured graph");
  generate->add_option("kind", gen.kind, "er | cubic | hypercube")
      ->required()
      ->check(CLI::IsMember({"er", "cubic", "hypercube"}));
  generate->add_option("--n", gen.n, "number of vertices");
  generate->add_option("--p", gen.p, "edge probability (er)");
  generate->add_option("--seed", gen.seed, "generator seed");
  generate->add_option("--d", gen.d, "dimension (hypercube)");
  generate->add_option("--out", gen.out, "output edge-list path (default: stdout)");

  SolveArgs sol;
  CLI::App* solve = app.add_subcommand("solve", "run seeded gradient flows and round them");
  solve->add_option("--graph", sol.cfg.graph_source, "edge-list path or generator spec")
      ->required();
  solve->add_option("--coupling", sol.cfg.coupling, "cos | <name>-fourier:K")
      ->capture_default_str();
  solve->add_option("--mu", sol.mu, "angle penalty (default 1 for cos, else 0)");
  add_tolerance_options(solve, sol.cfg);
  solve->add_option("--seed", sol.cfg.seed, "base seed")->capture_default_str();
  solve->add_option("--record-every", sol.cfg.record_every, "keep every k-th accepted step");
  solve->add_option("--out", sol.cfg.output_path, "result JSON path (default: stdout)");
  solve->add_option("--trajectory", sol.cfg.trajectory_path, "trajectory CSV path");
  solve->add_option("--trajectory-restart", sol.cfg.trajectory_restart,
                    "restart whose trajectory is written");
  solve->add_option("--threads", sol.threads, "worker threads (0 = all cores)");

  std::string oracle_graph, oracle_out;
  CLI::App* oracle = app.add_subcommand("oracle", "exact max-cut by exhaustive search");
  oracle->add_option("--graph", oracle_graph, "edge-list path or generator spec")->required();
  oracle->add_option("--out", oracle_out, "result JSON path (default: stdout)");

  std::string ratio_coupling;
  std::optional<double> ratio_lo, ratio_hi;
  CLI::App* ratio = app.add_subcommand("ratio", "approximation ratio of a coupling");
  ratio->add_option("--coupling", ratio_coupling, "cos | g2 | <name>-fourier:K")->required();
  ratio->add_option("--lo", ratio_lo, "interval lower end");
  ratio->add_option("--hi", ratio_hi, "interval upper end");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "tabulate solver runs over instances");
  bench->add_option("--graph", bench_args.graphs, "edge-list paths or generator specs");
  bench->add_option("--er-n", bench_args.er_n, "generated instance size");
  bench->add_option("--er-p", bench_args.er_p, "generated instance edge probability");
  bench->add_option("--instances", bench_args.instances, "number of generated instances");
  bench->add_option("--seed", bench_args.seed, "seed of the first generated instance");
  bench->add_option("--coupling", bench_args.couplings, "repeatable");
  bench->add_option("--mu", bench_args.mus, "repeatable");
  add_tolerance_options(bench, bench_args.base);
  bench->add_option("--solve-seed", bench_args.base.seed, "base seed of the restarts");
  bench->add_option("--threads", bench_args.threads, "worker threads (0 = all cores)");
  bench->add_option("--out", bench_args.out, "CSV path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (solve->parsed()) return cmd_solve(sol, out, err);
    if (oracle->parsed()) return cmd_oracle(oracle_graph, oracle_out, out);
    if (ratio->parsed()) return cmd_ratio(ratio_coupling, ratio_lo, ratio_hi, out);
    if (bench->parsed()) return cmd_bench(bench_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace oimcut::cli
