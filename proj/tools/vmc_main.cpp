// vmc: gelation, cluster distributions and extinction probabilities for the
// vector multiplicative coalescent, with three cross-validating simulators.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "vmc/branching.hpp"
#include "vmc/coalescent_sim.hpp"
#include "vmc/config.hpp"
#include "vmc/graph_sim.hpp"
#include "vmc/lambert_euler.hpp"
#include "vmc/model.hpp"
#include "vmc/smoluchowski.hpp"
#include "vmc/spanning_tree.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;

// ---------------------------------------------------------------------------
// Output: one tabular schema per subcommand, emitted as CSV (default) or a
// JSON mirror. The schema tag rides along in a dedicated first column so the
// header row itself is versioned.

std::string cell_to_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return fmt::format("{}", v.get<std::int64_t>());
  if (v.is_number_unsigned()) return fmt::format("{}", v.get<std::uint64_t>());
  if (v.is_number_float()) return fmt::format("{}", v.get<double>());
  if (v.is_null()) return "";
  return v.dump();
}

struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void row(std::vector<json> cells) { rows.push_back(std::move(cells)); }

  void write_csv(std::ostream& out) const {
    out << "schema";
    for (const auto& c : columns) out << ',' << c;
    out << '\n';
    for (const auto& r : rows) {
      out << schema;
      for (const auto& cell : r) out << ',' << cell_to_string(cell);
      out << '\n';
    }
  }

  json to_json() const {
    json doc;
    doc["schema"] = schema;
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      json obj;
      for (std::size_t i = 0; i < columns.size() && i < r.size(); ++i) obj[columns[i]] = r[i];
      doc["rows"].push_back(std::move(obj));
    }
    return doc;
  }
};

class Output {
 public:
  Output(const std::string& path, bool as_json) : as_json_(as_json) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void emit(const Table& table) {
    if (as_json_) {
      stream() << table.to_json().dump(2) << '\n';
    } else {
      table.write_csv(stream());
    }
  }

  void emit_pair(const Table& first, const Table& second) {
    if (as_json_) {
      json doc;
      doc[first.schema] = first.to_json();
      doc[second.schema] = second.to_json();
      stream() << doc.dump(2) << '\n';
    } else {
      first.write_csv(stream());
      stream() << '\n';
      second.write_csv(stream());
    }
  }

 private:
  bool as_json_;
  std::ofstream file_;
};

// ---------------------------------------------------------------------------
// Run configuration: model from the JSON config file, run fields from the
// same file when present, command line overriding both.

struct CommonOptions {
  std::string config_path;
  std::vector<double> t;
  std::optional<int> nmax;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> replicas;
  std::string out_path;
  bool as_json = false;
};

struct RunConfig {
  vmc::ModelParams model;
  std::vector<double> t;
  std::optional<int> nmax;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> replicas;

  int nmax_or_default() const { return nmax ? *nmax : vmc::default_nmax(model.k); }
  std::uint64_t n_or(std::uint64_t fallback) const { return n ? *n : fallback; }
  std::uint64_t seed_or(std::uint64_t fallback) const { return seed ? *seed : fallback; }
  std::uint64_t replicas_or(std::uint64_t fallback) const { return replicas ? *replicas : fallback; }

  double single_t(const char* subcommand) const {
    if (t.size() != 1)
      throw vmc::ConfigError("/t", std::string(subcommand) + " needs exactly one time point");
    return t.front();
  }
};

RunConfig load_run_config(const CommonOptions& opts) {
  if (opts.config_path.empty()) throw vmc::ConfigError("/", "--config is required");

  std::ifstream in(opts.config_path);
  if (!in) throw vmc::ConfigError("/", "cannot open config file: " + opts.config_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  RunConfig run;
  run.model = vmc::parse_model_json(text);

  const json doc = json::parse(text);
  if (doc.contains("t")) {
    const json& t = doc["t"];
    if (t.is_number()) {
      run.t = {t.get<double>()};
    } else if (t.is_array()) {
      for (const auto& v : t) {
        if (!v.is_number()) throw vmc::ConfigError("/t", "grid entries must be numbers");
        run.t.push_back(v.get<double>());
      }
    } else {
      throw vmc::ConfigError("/t", "must be a number or an array of numbers");
    }
  }
  auto read_uint = [&](const char* key, auto& field) {
    if (!doc.contains(key)) return;
    const json& v = doc[key];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw vmc::ConfigError(std::string("/") + key, "must be a nonnegative integer");
    field = v.get<std::uint64_t>();
  };
  if (doc.contains("nmax")) {
    if (!doc["nmax"].is_number_integer() || doc["nmax"].get<int>() < 1)
      throw vmc::ConfigError("/nmax", "must be a positive integer");
    run.nmax = doc["nmax"].get<int>();
  }
  std::optional<std::uint64_t> n_file, seed_file, replicas_file;
  read_uint("n", n_file);
  read_uint("seed", seed_file);
  read_uint("replicas", replicas_file);
  run.n = n_file;
  run.seed = seed_file;
  run.replicas = replicas_file;

  // Command line wins over the file.
  if (!opts.t.empty()) run.t = opts.t;
  if (opts.nmax) run.nmax = opts.nmax;
  if (opts.n) run.n = opts.n;
  if (opts.seed) run.seed = opts.seed;
  if (opts.replicas) run.replicas = opts.replicas;
  return run;
}

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON model/run config")->required();
  cmd->add_option("--t", opts.t, "time point(s); repeatable");
  cmd->add_option("--nmax", opts.nmax, "truncation depth for cluster sums");
  cmd->add_option("--n", opts.n, "simulator scale parameter");
  cmd->add_option("--seed", opts.seed, "base RNG seed");
  cmd->add_option("--replicas", opts.replicas, "independent replica count");
  cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
  cmd->add_flag("--json", opts.as_json, "emit JSON instead of CSV");
}

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_geltime(const CommonOptions& opts) {
  const RunConfig run = load_run_config(opts);
  const double rho = vmc::spectral_radius(vmc::scale_columns(run.model.V, run.model.alpha));
  const double t_gel = vmc::gelation_time(run.model);

  Table table;
  table.schema = "vmc.geltime.v1";
  table.columns = {"T_gel", "rho", "t", "rho_t", "region"};
  if (run.t.empty()) {
    table.row({t_gel, rho, nullptr, nullptr, nullptr});
  } else {
    for (double t : run.t) {
      const vmc::PhaseRegion region = vmc::classify(run.model, t);
      table.row({t_gel, rho, t, region.rho, vmc::to_string(region.region)});
    }
  }
  Output(opts.out_path, opts.as_json).emit(table);
  return kExitOk;
}

int cmd_invert(const CommonOptions& opts) {
  const RunConfig run = load_run_config(opts);
  if (run.t.empty()) throw vmc::ConfigError("/t", "invert needs at least one time point");

  Table table;
  table.schema = "vmc.invert.v1";
  table.columns = {"t"};
  for (int i = 1; i <= run.model.k; ++i) table.columns.push_back(fmt::format("y_{}", i));
  table.columns.insert(table.columns.end(), {"iterations", "residual", "region"});

  for (double t : run.t) {
    const vmc::InversionResult r = vmc::invert(run.model, t);
    std::vector<json> cells{t};
    for (double y : r.y) cells.emplace_back(y);
    cells.emplace_back(r.iterations);
    cells.emplace_back(r.residual);
    cells.emplace_back(vmc::to_string(r.region.region));
    table.row(std::move(cells));
  }
  Output(opts.out_path, opts.as_json).emit(table);
  return kExitOk;
}

int cmd_mass(const CommonOptions& opts) {
  const RunConfig run = load_run_config(opts);
  if (run.t.empty()) throw vmc::ConfigError("/t", "mass needs at least one time point");

  Table table;
  table.schema = "vmc.mass.v1";
  table.columns = {"t"};
  for (int i = 1; i <= run.model.k; ++i) table.columns.push_back(fmt::format("mass_{}", i));
  table.columns.push_back("tail_bound");

  for (double t : run.t) {
    const vmc::MassResult r = vmc::total_mass(run.model, t, run.nmax_or_default());
    std::vector<json> cells{t};
    for (double m : r.mass) cells.emplace_back(m);
    cells.emplace_back(r.tail_bound);
    table.row(std::move(cells));
  }
  Output(opts.out_path, opts.as_json).emit(table);
  return kExitOk;
}

int cmd_clusters(const CommonOptions& opts) {
  const RunConfig run = load_run_config(opts);
  const double t = run.single_t("clusters");

  Table table;
  table.schema = "vmc.clusters.v1";
  for (int i = 1; i <= run.model.k; ++i) table.columns.push_back(fmt::format("x_{}", i));
  table.columns.push_back("zeta");

  const vmc::ClusterDistribution d = vmc::cluster_distribution(run.model, t, run.nmax_or_default());
  for (const auto& [x, value] : d.entries) {
    std::vector<json> cells;
    for (int c : x.counts) cells.emplace_back(c);
    cells.emplace_back(value);
    table.row(std::move(cells));
  }
  Output(opts.out_path, opts.as_json).emit(table);
  return kExitOk;
}

int cmd_extinction(const CommonOptions& opts, int start_type) {
  const RunConfig run = load_run_config(opts);
  const double t = run.single_t("extinction");
  const vmc::MeanMatrix m = vmc::mean_matrix(run.model, t);

  Table table;
  table.schema = "vmc.extinction.v1";
  table.columns = {"method"};
  for (int i = 1; i <= run.model.k; ++i) table.columns.push_back(fmt::format("eta_{}", i));
  table.columns.insert(table.columns.end(), {"residual_or_tail", "n_replicas"});

  const vmc::ExtinctionVector fp = vmc::extinction_fixed_point(m);
  {
    std::vector<json> cells{"fixed_point"};
    for (double e : fp.eta) cells.emplace_back(e);
    cells.emplace_back(fp.residual);
    cells.emplace_back(0);
    table.row(std::move(cells));
  }
  {
    const vmc::ExtinctionSeries series = vmc::extinction_series(run.model, t, run.nmax_or_default());
    std::vector<json> cells{"series"};
    for (double e : series.eta) cells.emplace_back(e);
    cells.emplace_back(series.tail_bound);
    cells.emplace_back(0);
    table.row(std::move(cells));
  }
  const std::uint64_t replicas = run.replicas_or(0);
  if (replicas > 0) {
    std::vector<json> cells{"monte_carlo"};
    if (start_type >= 0) {
      // only the requested start type; other coordinates stay empty
      for (int i = 0; i < run.model.k; ++i) {
        if (i == start_type) {
          cells.emplace_back(
              vmc::extinction_monte_carlo(m, i, run.seed_or(0), replicas).frequency);
        } else {
          cells.emplace_back(nullptr);
        }
      }
    } else {
      for (int i = 0; i < run.model.k; ++i) {
        cells.emplace_back(vmc::extinction_monte_carlo(m, i, run.seed_or(0) + i, replicas).frequency);
      }
    }
    cells.emplace_back(nullptr);
    cells.emplace_back(replicas);
    table.row(std::move(cells));
  }
  Output(opts.out_path, opts.as_json).emit(table);
  return kExitOk;
}

void accumulate_census(vmc::ClusterCensus& into, const vmc::ClusterCensus& from) {
  for (const auto& [x, count] : from) into[x] += count;
}

int cmd_sim_graph(const CommonOptions& opts) {
  const RunConfig run = load_run_config(opts);
  const double t = run.single_t("sim-graph");
  const std::uint64_t n = run.n_or(10000);
  const std::uint64_t replicas = run.replicas_or(1);
  const std::uint64_t seed = run.seed_or(0);

  vmc::ClusterCensus merged;
  double giant_size_sum = 0.0;
  std::vector<double> giant_composition_sum(run.model.k, 0.0);
  for (std::uint64_t r = 0; r < replicas; ++r) {
    const vmc::GraphSample sample = vmc::sample_graph(run.model, t, n, seed ^ r);
    accumulate_census(merged, sample.census);
    giant_size_sum += static_cast<double>(sample.giant.size);
    for (int i = 0; i < run.model.k; ++i)
      giant_composition_sum[i] += static_cast<double>(sample.giant.composition[i]);
  }

  Table census_table;
  census_table.schema = "vmc.sim-graph.census.v1";
  for (int i = 1; i <= run.model.k; ++i) census_table.columns.push_back(fmt::format("x_{}", i));
  census_table.columns.insert(census_table.columns.end(), {"count", "scaled"});
  for (const auto& [x, count] : merged) {
    std::vector<json> cells;
    for (int c : x.counts) cells.emplace_back(c);
    cells.emplace_back(count);
    cells.emplace_back(static_cast<double>(count) / (static_cast<double>(n) * replicas));
    census_table.row(std::move(cells));
  }

  Table giant_table;
  giant_table.schema = "vmc.sim-graph.giant.v1";
  giant_table.columns = {"size"};
  for (int i = 1; i <= run.model.k; ++i)
    giant_table.columns.push_back(fmt::format("composition_{}", i));
  giant_table.columns.push_back("fraction");
  {
    const double mean_size = giant_size_sum / replicas;
    std::vector<json> cells{mean_size};
    for (double c : giant_composition_sum) cells.emplace_back(c / replicas);
    cells.emplace_back(mean_size / static_cast<double>(n));
    giant_table.row(std::move(cells));
  }

  Output(opts.out_path, opts.as_json).emit_pair(census_table, giant_table);
  return kExitOk;
}

int cmd_sim_coalescent(const CommonOptions& opts) {
  const RunConfig run = load_run_config(opts);
  if (run.t.empty()) throw vmc::ConfigError("/t", "sim-coalescent needs at least one time point");
  std::vector<double> snapshots = run.t;
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    if (!(snapshots[i] > snapshots[i - 1]))
      throw vmc::ConfigError("/t", "snapshot times must be strictly increasing");
  }
  const std::uint64_t n = run.n_or(10000);
  const std::uint64_t replicas = run.replicas_or(1);
  const std::uint64_t seed = run.seed_or(0);

  std::vector<vmc::ClusterCensus> merged(snapshots.size());
  for (std::uint64_t r = 0; r < replicas; ++r) {
    vmc::CoalescentState state = vmc::init_state(run.model, n, seed ^ r);
    for (std::size_t s = 0; s < snapshots.size(); ++s) {
      vmc::run_until(state, snapshots[s]);
      accumulate_census(merged[s], vmc::census(state));
    }
  }

  Table table;
  table.schema = "vmc.sim-coalescent.census.v1";
  table.columns = {"t"};
  for (int i = 1; i <= run.model.k; ++i) table.columns.push_back(fmt::format("x_{}", i));
  table.columns.insert(table.columns.end(), {"count", "scaled"});
  for (std::size_t s = 0; s < snapshots.size(); ++s) {
    for (const auto& [x, count] : merged[s]) {
      std::vector<json> cells{snapshots[s]};
      for (int c : x.counts) cells.emplace_back(c);
      cells.emplace_back(count);
      cells.emplace_back(static_cast<double>(count) / (static_cast<double>(n) * replicas));
      table.row(std::move(cells));
    }
  }
  Output(opts.out_path, opts.as_json).emit(table);
  return kExitOk;
}

int cmd_sim_branching(const CommonOptions& opts, int start_type, std::uint64_t max_generations,
                      std::uint64_t population_cap, bool per_replica) {
  const RunConfig run = load_run_config(opts);
  const double t = run.single_t("sim-branching");
  const vmc::MeanMatrix m = vmc::mean_matrix(run.model, t);
  const std::uint64_t replicas = run.replicas_or(10000);
  const std::uint64_t seed = run.seed_or(0);
  const int start = start_type < 0 ? 0 : start_type;

  if (per_replica) {
    Table table;
    table.schema = "vmc.sim-branching.replicas.v1";
    table.columns = {"replica", "outcome", "generation"};
    for (std::uint64_t r = 0; r < replicas; ++r) {
      const vmc::BranchingOutcome o =
          vmc::simulate_branching(m, start, seed ^ r, max_generations, population_cap);
      table.row({r, o.extinct ? "extinct" : "survived", o.generation});
    }
    Output(opts.out_path, opts.as_json).emit(table);
    return kExitOk;
  }

  const vmc::ExtinctionEstimate est =
      vmc::extinction_monte_carlo(m, start, seed, replicas, max_generations, population_cap);
  Table table;
  table.schema = "vmc.sim-branching.v1";
  table.columns = {"start_type", "replicas", "extinct", "frequency"};
  table.row({start, est.replicas, est.extinct, est.frequency});
  Output(opts.out_path, opts.as_json).emit(table);
  return kExitOk;
}

int cmd_compare(const CommonOptions& opts) {
  const RunConfig run = load_run_config(opts);
  if (run.t.empty()) throw vmc::ConfigError("/t", "compare needs at least one time point");
  const int k = run.model.k;
  const int nmax = run.nmax ? *run.nmax : std::max(vmc::default_nmax(k), 120 / k);

  Table table;
  table.schema = "vmc.compare.v1";
  table.columns = {"t", "region"};
  for (int i = 1; i <= k; ++i) table.columns.push_back(fmt::format("y_inversion_{}", i));
  for (int i = 1; i <= k; ++i) table.columns.push_back(fmt::format("y_fixed_point_{}", i));
  for (int i = 1; i <= k; ++i) table.columns.push_back(fmt::format("y_series_{}", i));
  for (int i = 1; i <= k; ++i) table.columns.push_back(fmt::format("y_mass_{}", i));
  table.columns.insert(table.columns.end(),
                       {"max_discrepancy", "tolerance", "mc_checked", "mc_within", "verdict"});

  const std::uint64_t replicas = run.replicas_or(0);
  bool all_pass = true;
  for (double t : run.t) {
    const vmc::InversionResult inv = vmc::invert(run.model, t);
    const vmc::ExtinctionVector fp = vmc::extinction_fixed_point(vmc::mean_matrix(run.model, t));
    const vmc::ExtinctionSeries series = vmc::extinction_series(run.model, t, nmax);
    const vmc::MassResult mass = vmc::total_mass(run.model, t, nmax);

    std::vector<std::vector<double>> routes(4, std::vector<double>(k));
    for (int i = 0; i < k; ++i) {
      routes[0][i] = inv.y[i];
      routes[1][i] = run.model.alpha[i] * t * fp.eta[i];
      routes[2][i] = run.model.alpha[i] * t * series.eta[i];
      routes[3][i] = t * mass.mass[i];
    }
    double discrepancy = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int i = 0; i < k; ++i)
          discrepancy = std::max(discrepancy, std::abs(routes[a][i] - routes[b][i]));
    const double tolerance = 1e-6 + t * mass.tail_bound;
    const bool pass = discrepancy <= tolerance;
    all_pass = all_pass && pass;

    // Optional Monte Carlo cross-check: graph census against the analytic
    // densities, 5-sigma bands on entries with expected count >= 50.
    std::uint64_t mc_checked = 0, mc_within = 0;
    if (replicas > 0) {
      const std::uint64_t n = run.n_or(10000);
      for (std::uint64_t r = 0; r < replicas; ++r) {
        const vmc::GraphSample sample = vmc::sample_graph(run.model, t, n, run.seed_or(0) ^ r);
        vmc::for_each_size(k, std::min(nmax, 8), [&](const vmc::ClusterSize& x) {
          const double expected = vmc::zeta(run.model, x, t) * static_cast<double>(n);
          if (expected < 50.0) return;
          const auto it = sample.census.find(x);
          const double observed = it == sample.census.end() ? 0.0 : double(it->second);
          ++mc_checked;
          if (std::abs(observed - expected) <= 5.0 * std::sqrt(expected)) ++mc_within;
        });
      }
    }

    std::vector<json> cells{t, vmc::to_string(inv.region.region)};
    for (const auto& route : routes)
      for (double y : route) cells.emplace_back(y);
    cells.emplace_back(discrepancy);
    cells.emplace_back(tolerance);
    cells.emplace_back(mc_checked);
    cells.emplace_back(mc_within);
    cells.emplace_back(pass ? "pass" : "fail");
    table.row(std::move(cells));
  }

  Output(opts.out_path, opts.as_json).emit(table);
  return all_pass ? kExitOk : kExitToleranceFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gelation and extinction toolkit for the vector multiplicative coalescent"};
  app.require_subcommand(1);

  CommonOptions opts;
  int start_type = -1;
  std::uint64_t max_generations = vmc::kDefaultMaxGenerations;
  std::uint64_t population_cap = vmc::kDefaultPopulationCap;
  bool per_replica = false;

  CLI::App* geltime = app.add_subcommand("geltime", "gelation time, spectral radius, phase regions");
  add_common_options(geltime, opts);

  CLI::App* invert = app.add_subcommand("invert", "Lambert-Euler inversion along a time grid");
  add_common_options(invert, opts);

  CLI::App* mass = app.add_subcommand("mass", "truncated total mass along a time grid");
  add_common_options(mass, opts);

  CLI::App* clusters = app.add_subcommand("clusters", "cluster-size distribution at one time");
  add_common_options(clusters, opts);

  CLI::App* extinction =
      app.add_subcommand("extinction", "extinction probabilities by every analytic route");
  add_common_options(extinction, opts);
  extinction->add_option("--start-type", start_type, "restrict Monte Carlo to one starting type");

  CLI::App* sim_graph = app.add_subcommand("sim-graph", "multipartite random graph census");
  add_common_options(sim_graph, opts);

  CLI::App* sim_coalescent =
      app.add_subcommand("sim-coalescent", "event-driven coalescent census at snapshot times");
  add_common_options(sim_coalescent, opts);

  CLI::App* sim_branching = app.add_subcommand("sim-branching", "branching process Monte Carlo");
  add_common_options(sim_branching, opts);
  sim_branching->add_option("--start-type", start_type, "starting type (default 0)");
  sim_branching->add_option("--max-generations", max_generations, "generation cap");
  sim_branching->add_option("--population-cap", population_cap, "population cap");
  sim_branching->add_flag("--per-replica", per_replica, "emit one row per replica");

  CLI::App* compare =
      app.add_subcommand("compare", "cross-validate all analytic routes (exit 1 on mismatch)");
  add_common_options(compare, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (geltime->parsed()) return cmd_geltime(opts);
    if (invert->parsed()) return cmd_invert(opts);
    if (mass->parsed()) return cmd_mass(opts);
    if (clusters->parsed()) return cmd_clusters(opts);
    if (extinction->parsed()) return cmd_extinction(opts, start_type);
    if (sim_graph->parsed()) return cmd_sim_graph(opts);
    if (sim_coalescent->parsed()) return cmd_sim_coalescent(opts);
    if (sim_branching->parsed())
      return cmd_sim_branching(opts, start_type, max_generations, population_cap, per_replica);
    if (compare->parsed()) return cmd_compare(opts);
  } catch (const vmc::ValidationError& e) {
    std::cerr << "validation error at " << e.path() << ": " << e.what() << '\n';
    return kExitValidation;
  } catch (const vmc::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const vmc::NoConvergence& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
