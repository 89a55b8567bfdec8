// Copyright 2026 The ravqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ravqe/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ravqe/density_matrix.hpp"
#include "ravqe/harness.hpp"
#include "ravqe/pauli.hpp"
#include "ravqe/records.hpp"
#include "ravqe/transition.hpp"

namespace ravqe {

using nlohmann::json;

namespace {

template <class T>
struct is_vector : std::false_type {};
template <class T>
struct is_vector<std::vector<T>> : std::true_type {};

template <class T>
void assign_from_json(T& var, const json& j) {
  if constexpr (is_vector<T>::value) {
    if (!j.is_array()) {
      var = T{j.get<typename T::value_type>()};
      return;
    }
  }
  var = j.get<T>();
}

std::string normalize_key(std::string k) {
  for (char& c : k)
    if (c == '_') c = '-';
  return k;
}

// Options of one subcommand, addressable by flag name from a JSON config.
class Registry {
 public:
  explicit Registry(CLI::App* app) : app_(app) {}

  template <class T>
  CLI::Option* add(const std::string& key, T& var, const std::string& help, bool embed = true) {
    CLI::Option* opt = app_->add_option("--" + key, var, help)->capture_default_str();
    entries_[key] = {opt, [&var](const json& j) { assign_from_json(var, j); }, [&var] { return json(var); }, embed};
    return opt;
  }

  CLI::Option* flag(const std::string& key, bool& var, const std::string& help) {
    CLI::Option* opt = app_->add_flag("--" + key, var, help);
    entries_[key] = {opt, [&var](const json& j) { var = j.get<bool>(); }, [&var] { return json(var); }, true};
    return opt;
  }

  /// File values fill options not given on the command line. Nested objects
  /// are flattened; a nested "kind" names its parent key.
  void apply(const json& j, const std::string& parent = "") {
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    for (const auto& [raw, value] : j.items()) {
      std::string key = normalize_key(raw);
      if (!parent.empty() && key == "kind") key = parent;
      if (value.is_object()) {
        apply(value, key);
        continue;
      }
      auto it = entries_.find(key);
      if (it == entries_.end() || key == "config") throw std::invalid_argument("config: unknown key '" + raw + "'");
      if (it->second.opt->count() > 0) continue;
      try {
        it->second.set(value);
      } catch (const json::exception& e) {
        throw std::invalid_argument("config: bad value for '" + raw + "': " + e.what());
      }
    }
  }

  json resolved(const std::string& command) const {
    json j;
    j["command"] = command;
    for (const auto& [key, e] : entries_)
      if (e.embed) j[key] = e.get();
    return j;
  }

 private:
  struct Entry {
    CLI::Option* opt;
    std::function<void(const json&)> set;
    std::function<json()> get;
    bool embed;
  };
  CLI::App* app_;
  std::map<std::string, Entry> entries_;
};

int default_workers() {
  const char* env = std::getenv("RAVQE_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) throw std::invalid_argument("RAVQE_WORKERS must be a positive integer");
  return static_cast<int>(v);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read '" + path + "'");
  return is;
}

json read_config_file(const std::string& path) {
  auto is = open_in(path);
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw std::invalid_argument("config: " + path + ": " + e.what());
  }
}

struct Common {
  std::string config;
  std::uint64_t seed = 0;
  int workers = 1;
};

void add_common(Registry& reg, Common& c) {
  reg.add("config", c.config, "JSON config file; flags override its fields", false);
  reg.add("seed", c.seed, "master seed");
  reg.add("workers", c.workers, "parallel workers (default from RAVQE_WORKERS)", false)->check(CLI::PositiveNumber);
}

// vqe, sweep and noisy share this.
struct VqeOptions {
  Common common;
  int n = 8;
  std::vector<std::string> strategies{"plain"};
  std::vector<int> depths{2};
  std::vector<double> jzs{1.0};
  int m = 10;
  std::string trigger = "equal";
  double tolerance = 1e-6;
  int window = 50;
  std::string optimizer = "adam";
  double lr = 0.01;
  double decay_rate = 0.9;
  int decay_steps = 100;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int maxiter = 5000;
  int trials = 10;
  int trajectory_every = 10;
  bool timing = false;
  std::string quartiles = "inclusive";
  std::string backend = "statevector";
  double p_noise = 0.0;
  std::string out;
  std::string summary;
  std::string distribution;
};

enum class VqeFlavor { Single, Sweep, Noisy };

void add_vqe_options(Registry& reg, VqeOptions& o, VqeFlavor flavor, const std::string& stem) {
  add_common(reg, o.common);
  reg.add("n", o.n, "chain length (even)");
  if (flavor == VqeFlavor::Single) {
    reg.add("strategy", o.strategies, "plain, plainstar, ra, laa or lpa")->expected(1);
    reg.add("l", o.depths, "HVA depth")->expected(1);
    reg.add("jz", o.jzs, "ZZ anisotropy")->expected(1);
  } else {
    reg.add("strategies", o.strategies, "strategies to compare")->expected(1, 16);
    reg.add("depths", o.depths, "HVA depths")->expected(1, 64);
    reg.add("jzs", o.jzs, "ZZ anisotropies")->expected(1, 64);
  }
  reg.add("m", o.m, "RA rounds");
  reg.add("trigger", o.trigger, "activation trigger: equal or plateau");
  reg.add("tolerance", o.tolerance, "plateau relative-improvement threshold");
  reg.add("window", o.window, "plateau window, iterations");
  reg.add("optimizer", o.optimizer, "adam or sgd");
  reg.add("lr", o.lr, "learning rate");
  reg.add("decay-rate", o.decay_rate, "learning-rate decay factor");
  reg.add("decay-steps", o.decay_steps, "iterations per decay factor");
  reg.add("beta1", o.beta1, "Adam first-moment decay");
  reg.add("beta2", o.beta2, "Adam second-moment decay");
  reg.add("epsilon", o.epsilon, "Adam denominator offset");
  reg.add("maxiter", o.maxiter, "iterations per trial");
  reg.add("trials", o.trials, "independent trials per cell");
  reg.add("trajectory-every", o.trajectory_every, "record the energy every k iterations");
  reg.flag("timing", o.timing, "record wall time per trial (outputs no longer reproducible)");
  reg.add("quartiles", o.quartiles, "inclusive or exclusive");
  if (flavor == VqeFlavor::Noisy) {
    o.backend = "density";
    o.p_noise = 1e-3;
    reg.add("p-noise", o.p_noise, "two-qubit depolarizing strength after each gate");
  } else {
    reg.add("backend", o.backend, "statevector or density");
    reg.add("p-noise", o.p_noise, "depolarizing strength (density backend)");
  }
  o.out = stem + ".jsonl";
  o.summary = stem + "_summary.csv";
  o.distribution = stem + "_distribution.csv";
  reg.add("out", o.out, "JSON-lines trial records", false);
  reg.add("summary", o.summary, "CSV summary", false);
  reg.add("distribution", o.distribution, "CSV accumulated distribution", false);
}

int run_vqe_grid(const VqeOptions& o, const json& resolved) {
  std::vector<TrialConfig> cells;
  for (const auto& s : o.strategies) {
    for (int l : o.depths) {
      for (double jz : o.jzs) {
        TrialConfig c;
        c.strategy.kind = strategy_kind_from_string(s);
        c.strategy.m = o.m;
        c.strategy.trigger.kind = trigger_kind_from_string(o.trigger);
        c.strategy.trigger.tolerance = o.tolerance;
        c.strategy.trigger.window = o.window;
        c.n = o.n;
        c.l = l;
        c.jz = jz;
        c.optimizer.kind = optimizer_kind_from_string(o.optimizer);
        c.optimizer.learning_rate = o.lr;
        c.optimizer.decay_rate = o.decay_rate;
        c.optimizer.decay_steps = o.decay_steps;
        c.optimizer.beta1 = o.beta1;
        c.optimizer.beta2 = o.beta2;
        c.optimizer.epsilon = o.epsilon;
        c.optimizer.maxiter = o.maxiter;
        c.trials = o.trials;
        c.seed = o.common.seed;
        c.workers = o.common.workers;
        c.backend = backend_kind_from_string(o.backend);
        c.p_noise = o.p_noise;
        c.trajectory_every = o.trajectory_every;
        c.timing = o.timing;
        c.validate();
        cells.push_back(c);
      }
    }
  }
  const QuartileConvention quartiles = quartile_convention_from_string(o.quartiles);

  auto records_os = open_out(o.out);
  auto summary_os = open_out(o.summary);
  auto dist_os = open_out(o.distribution);
  write_jsonl_header(records_os, resolved);
  write_csv_preamble(summary_os, resolved);
  write_csv_preamble(dist_os, resolved);
  dist_os << "strategy,l,jz,energy,fraction\n";

  std::map<double, double> exact_by_jz;
  std::vector<SummaryRow> rows;
  std::size_t failures = 0;
  for (const auto& c : cells) {
    if (!exact_by_jz.count(c.jz))
      exact_by_jz[c.jz] = c.n <= kMaxDenseQubits ? exact_ground_energy(build_xxz(c.n, c.jz)) : std::nan("");
    const double exact = exact_by_jz[c.jz];
    const auto records = run_trials(c);
    for (const auto& r : records) {
      write_jsonl_record(records_os, r, exact);
      if (!r.ok()) {
        ++failures;
        std::cerr << "trial " << r.index << " (" << to_string(c.strategy.kind) << ", l=" << c.l
                  << ", jz=" << c.jz << ") failed: " << r.error << '\n';
      }
    }
    const auto energies = final_energies(records);
    if (energies.empty()) continue;
    rows.push_back(summarize(c, records, exact, quartiles));
    write_distribution_csv(dist_os, c.strategy.kind, c.l, c.jz, accumulated_distribution(energies));
    const auto& r = rows.back();
    std::cout << to_string(r.strategy) << " n=" << r.n << " l=" << r.l << " jz=" << r.jz << "  mean "
              << r.box.mean << "  median " << r.box.median << "  best " << r.best << "  exact " << r.exact
              << "  success " << r.success_fraction << '\n';
  }
  write_summary_csv(summary_os, rows);
  return failures ? 2 : 0;
}

struct VarianceOptions {
  Common common;
  std::vector<int> sizes{4, 6, 8, 10};
  int l = 7;
  std::vector<double> densities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  int samples = 200;
  double jz = 1.0;
  std::string out = "bp_variance.csv";
};

int run_variance(const VarianceOptions& o, const json& resolved) {
  auto os = open_out(o.out);
  write_csv_preamble(os, resolved);
  write_variance_csv_header(os);
  for (int n : o.sizes) {
    const auto points = gradient_variance_experiment(build_xxz(n, o.jz), o.l, o.densities, o.samples,
                                                     o.common.seed, o.common.workers);
    write_variance_rows(os, n, o.l, points);
    for (const auto& p : points)
      std::cout << "n=" << n << " density " << p.density << "  variance " << p.variance << " +- " << p.std_error
                << '\n';
  }
  return 0;
}

struct CollapseOptions {
  double pc = 0.0;
  double nu_min = 0.3;
  double nu_max = 2.0;
  int nu_steps = 171;
};

void add_collapse_options(Registry& reg, CollapseOptions& c) {
  reg.add("pc", c.pc, "critical activation ratio");
  reg.add("nu-min", c.nu_min, "smallest nu on the grid");
  reg.add("nu-max", c.nu_max, "largest nu on the grid");
  reg.add("nu-steps", c.nu_steps, "grid points")->check(CLI::PositiveNumber);
}

CollapseResult collapse_and_report(const std::vector<TransitionCurve>& curves, const CollapseOptions& c,
                                   const std::string& path, const json& resolved) {
  const auto result = data_collapse(curves, c.pc, linspace(c.nu_min, c.nu_max, c.nu_steps));
  auto os = open_out(path);
  write_csv_preamble(os, resolved);
  write_collapse_csv(os, result);
  std::cout << "collapse: nu " << result.nu << "  cost " << result.cost
            << (result.degenerate ? "  (degenerate)" : "") << '\n';
  return result;
}

struct TransitionOptions {
  Common common;
  std::vector<int> sizes{8, 12, 16};
  std::vector<double> ps{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  int blocks = 0;
  int samples = 200;
  std::string init = "singlet";
  bool collapse = false;
  CollapseOptions fit;
  std::string out = "transition.csv";
  std::string collapse_out = "transition_collapse.csv";
};

int run_transition_cmd(const TransitionOptions& o, const json& resolved) {
  std::vector<TransitionCurve> curves;
  for (int L : o.sizes) {
    for (double p : o.ps) {
      TransitionConfig c;
      c.L = L;
      c.p = p;
      c.blocks = o.blocks;
      c.samples = o.samples;
      c.init = transition_init_from_string(o.init);
      c.seed = o.common.seed;
      c.workers = o.common.workers;
      curves.push_back(run_transition(c));
      std::cout << "L=" << L << " p=" << p << "  S_A " << curves.back().mean << " +- " << curves.back().std_error
                << '\n';
    }
  }
  auto os = open_out(o.out);
  write_csv_preamble(os, resolved);
  write_transition_csv(os, curves);
  if (o.collapse) collapse_and_report(curves, o.fit, o.collapse_out, resolved);
  return 0;
}

struct CollapseCmdOptions {
  std::string in;
  CollapseOptions fit;
  std::string out = "collapse.csv";
};

struct StatsOptions {
  std::string in;
  double exact = std::nan("");
  std::string quartiles = "inclusive";
  std::string out = "stats.csv";
  std::string distribution = "stats_distribution.csv";
};

std::vector<double> read_values(const std::string& path) {
  auto is = open_in(path);
  if (path.size() >= 6 && path.compare(path.size() - 6, 6, ".jsonl") == 0) return final_energies(read_jsonl_records(is));
  std::vector<double> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& ch : line)
      if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("stats: '" + tok + "' in " + path + " is not a number");
      out.push_back(v);
    }
  }
  return out;
}

int run_stats(const StatsOptions& o, const json& resolved) {
  const auto values = read_values(o.in);
  const BoxStats b = box_stats(values, quartile_convention_from_string(o.quartiles));
  std::optional<double> exact;
  if (!std::isnan(o.exact)) exact = o.exact;
  auto os = open_out(o.out);
  write_csv_preamble(os, resolved);
  write_box_csv(os, b, values.size(), exact);
  auto ds = open_out(o.distribution);
  write_csv_preamble(ds, resolved);
  ds << "value,fraction\n";
  for (const auto& [v, f] : accumulated_distribution(values)) ds << format_double(v) << ',' << format_double(f) << '\n';
  std::cout << "n " << values.size() << "  median " << b.median << "  Q1 " << b.q1 << "  Q3 " << b.q3 << "  fences ("
            << b.lower_fence << ", " << b.upper_fence << ")  outliers " << b.outliers.size() << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Random-activation VQE lab"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  int workers_default = 1;
  try {
    workers_default = default_workers();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  VqeOptions vqe, sweep, noisy;
  vqe.common.workers = sweep.common.workers = noisy.common.workers = workers_default;
  noisy.n = 6;
  noisy.strategies = {"plain", "ra"};
  noisy.optimizer = "sgd";
  noisy.maxiter = 1000;
  sweep.strategies = {"plain", "ra"};
  vqe.trials = 1;

  auto* vqe_app = app.add_subcommand("vqe", "VQE trials for one strategy and depth");
  Registry vqe_reg(vqe_app);
  add_vqe_options(vqe_reg, vqe, VqeFlavor::Single, "vqe");

  auto* sweep_app = app.add_subcommand("sweep", "VQE trials over strategies, depths and anisotropies");
  Registry sweep_reg(sweep_app);
  add_vqe_options(sweep_reg, sweep, VqeFlavor::Sweep, "sweep");

  auto* noisy_app = app.add_subcommand("noisy", "VQE under two-qubit depolarizing noise, parameter-shift gradients");
  Registry noisy_reg(noisy_app);
  add_vqe_options(noisy_reg, noisy, VqeFlavor::Noisy, "noisy");

  VarianceOptions var;
  var.common.workers = workers_default;
  auto* var_app = app.add_subcommand("bp-variance", "gradient variance versus activation density");
  Registry var_reg(var_app);
  add_common(var_reg, var.common);
  var_reg.add("sizes", var.sizes, "chain lengths")->expected(1, 32);
  var_reg.add("l", var.l, "HVA depth");
  var_reg.add("densities", var.densities, "activation densities in (0, 1]")->expected(1, 1000);
  var_reg.add("samples", var.samples, "random circuits per density");
  var_reg.add("jz", var.jz, "ZZ anisotropy");
  var_reg.add("out", var.out, "CSV output", false);

  TransitionOptions tr;
  tr.common.workers = workers_default;
  auto* tr_app = app.add_subcommand("transition", "Clifford entanglement transition curves");
  Registry tr_reg(tr_app);
  add_common(tr_reg, tr.common);
  tr_reg.add("sizes", tr.sizes, "chain lengths L")->expected(1, 32);
  tr_reg.add("ps", tr.ps, "activation ratios")->expected(1, 1000);
  tr_reg.add("blocks", tr.blocks, "HVA layers per circuit (0: 8L)");
  tr_reg.add("samples", tr.samples, "circuits per point");
  tr_reg.add("init", tr.init, "singlet or zero");
  tr_reg.flag("collapse", tr.collapse, "also fit nu by data collapse");
  add_collapse_options(tr_reg, tr.fit);
  tr_reg.add("out", tr.out, "CSV curves", false);
  tr_reg.add("collapse-out", tr.collapse_out, "CSV collapse costs", false);

  CollapseCmdOptions co;
  auto* co_app = app.add_subcommand("collapse", "data collapse of transition curves");
  Registry co_reg(co_app);
  std::string co_config;
  int co_workers = workers_default;
  co_reg.add("config", co_config, "JSON config file", false);
  co_reg.add("workers", co_workers, "accepted for uniformity; the fit is serial", false)->check(CLI::PositiveNumber);
  co_reg.add("in", co.in, "CSV curves from the transition command")->required();
  add_collapse_options(co_reg, co.fit);
  co_reg.add("out", co.out, "CSV collapse costs", false);

  StatsOptions st;
  auto* st_app = app.add_subcommand("stats", "box statistics and accumulated distribution");
  Registry st_reg(st_app);
  std::string st_config;
  int st_workers = workers_default;
  st_reg.add("config", st_config, "JSON config file", false);
  st_reg.add("workers", st_workers, "accepted for uniformity; statistics are serial", false)->check(CLI::PositiveNumber);
  st_reg.add("in", st.in, "JSON-lines records or a list of numbers")->required();
  st_reg.add("exact", st.exact, "reference energy for relative errors");
  st_reg.add("quartiles", st.quartiles, "inclusive or exclusive");
  st_reg.add("out", st.out, "CSV box statistics", false);
  st_reg.add("distribution", st.distribution, "CSV accumulated distribution", false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    auto load = [](Registry& reg, const std::string& path) {
      if (!path.empty()) reg.apply(read_config_file(path));
    };
    if (vqe_app->parsed()) {
      load(vqe_reg, vqe.common.config);
      return run_vqe_grid(vqe, vqe_reg.resolved("vqe"));
    }
    if (sweep_app->parsed()) {
      load(sweep_reg, sweep.common.config);
      return run_vqe_grid(sweep, sweep_reg.resolved("sweep"));
    }
    if (noisy_app->parsed()) {
      load(noisy_reg, noisy.common.config);
      if (noisy.n > kMaxDensityQubits)
        throw std::invalid_argument("noisy: n must be <= " + std::to_string(kMaxDensityQubits));
      return run_vqe_grid(noisy, noisy_reg.resolved("noisy"));
    }
    if (var_app->parsed()) {
      load(var_reg, var.common.config);
      return run_variance(var, var_reg.resolved("bp-variance"));
    }
    if (tr_app->parsed()) {
      load(tr_reg, tr.common.config);
      return run_transition_cmd(tr, tr_reg.resolved("transition"));
    }
    if (co_app->parsed()) {
      load(co_reg, co_config);
      auto is = open_in(co.in);
      collapse_and_report(read_transition_csv(is), co.fit, co.out, co_reg.resolved("collapse"));
      return 0;
    }
    if (st_app->parsed()) {
      load(st_reg, st_config);
      return run_stats(st, st_reg.resolved("stats"));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run_cli(args);
}

}  // namespace ravqe
