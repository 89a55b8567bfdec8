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

#include "ravqe/records.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ravqe {

using nlohmann::json;

std::string version_string() { return RAVQE_VERSION; }

json to_json(const OptimizerConfig& c) {
  return {{"kind", to_string(c.kind)},       {"learning_rate", c.learning_rate}, {"decay_rate", c.decay_rate},
          {"decay_steps", c.decay_steps},    {"beta1", c.beta1},                 {"beta2", c.beta2},
          {"epsilon", c.epsilon},            {"maxiter", c.maxiter}};
}

OptimizerConfig optimizer_config_from_json(const json& j) {
  OptimizerConfig c;
  c.kind = optimizer_kind_from_string(j.at("kind").get<std::string>());
  c.learning_rate = j.at("learning_rate").get<double>();
  c.decay_rate = j.at("decay_rate").get<double>();
  c.decay_steps = j.at("decay_steps").get<int>();
  c.beta1 = j.at("beta1").get<double>();
  c.beta2 = j.at("beta2").get<double>();
  c.epsilon = j.at("epsilon").get<double>();
  c.maxiter = j.at("maxiter").get<int>();
  return c;
}

json to_json(const TrialRecord& r, std::optional<double> exact) {
  json j;
  j["kind"] = "trial";
  j["index"] = r.index;
  j["seed"] = r.seed;
  j["strategy"] = to_string(r.strategy);
  j["n"] = r.n;
  j["l"] = r.l;
  j["jz"] = r.jz;
  j["optimizer"] = to_json(r.optimizer);
  if (!r.ok()) {
    j["error"] = r.error;
    return j;
  }
  json traj = json::array();
  for (const auto& [t, e] : r.trajectory) traj.push_back({t, e});
  j["trajectory"] = std::move(traj);
  j["final_energy"] = r.final_energy;
  json ev = json::array();
  for (const auto& e : r.events)
    ev.push_back({{"iteration", e.iteration}, {"energy_before", e.energy_before},
                  {"energy_after", e.energy_after}, {"active_after", e.active_after}});
  j["events"] = std::move(ev);
  if (r.accounting) j["evaluations"] = r.evaluations;
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
  if (exact && std::isfinite(*exact) && *exact != 0.0) {
    j["exact_energy"] = *exact;
    j["relative_error"] = relative_error(r.final_energy, *exact);
  }
  return j;
}

TrialRecord trial_record_from_json(const json& j) {
  TrialRecord r;
  r.index = j.at("index").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.strategy = strategy_kind_from_string(j.at("strategy").get<std::string>());
  r.n = j.at("n").get<int>();
  r.l = j.at("l").get<int>();
  r.jz = j.at("jz").get<double>();
  r.optimizer = optimizer_config_from_json(j.at("optimizer"));
  if (j.contains("error")) {
    r.error = j["error"].get<std::string>();
    r.accounting = false;
    return r;
  }
  for (const auto& p : j.at("trajectory")) r.trajectory.emplace_back(p.at(0).get<int>(), p.at(1).get<double>());
  r.final_energy = j.at("final_energy").get<double>();
  for (const auto& e : j.at("events"))
    r.events.push_back({e.at("iteration").get<int>(), e.at("energy_before").get<double>(),
                        e.at("energy_after").get<double>(), e.at("active_after").get<std::size_t>()});
  r.accounting = j.contains("evaluations");
  if (r.accounting) r.evaluations = j["evaluations"].get<std::uint64_t>();
  if (j.contains("wall_seconds")) r.wall_seconds = j["wall_seconds"].get<double>();
  return r;
}

void write_jsonl_header(std::ostream& os, const json& config) {
  os << json{{"kind", "header"}, {"version", version_string()}, {"config", config}}.dump() << '\n';
}

void write_jsonl_record(std::ostream& os, const TrialRecord& r, std::optional<double> exact) {
  os << to_json(r, exact).dump() << '\n';
}

std::vector<TrialRecord> read_jsonl_records(std::istream& is) {
  std::vector<TrialRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    if (j.value("kind", "") == "trial") out.push_back(trial_record_from_json(j));
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv_preamble(std::ostream& os, const json& config) {
  os << "# ravqe " << version_string() << '\n' << "# config " << config.dump() << '\n';
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < header.size(); ++k)
    if (header[k] == name) return k;
  throw std::out_of_range("csv: missing column '" + name + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("csv: bad number '" + s + "'");
  return v;
}

}  // namespace

CsvTable read_csv(std::istream& is) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
    } else {
      if (cells.size() != t.header.size()) throw std::invalid_argument("csv: row width differs from header");
      t.rows.push_back(std::move(cells));
    }
  }
  if (!have_header) throw std::invalid_argument("csv: no header row");
  return t;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "strategy,n,l,jz,trials,failed,exact,mean,median,q1,q3,iqr,lower_fence,upper_fence,"
        "whisker_low,whisker_high,outliers,best,worst,success_fraction,mean_relative_error\n";
  for (const auto& r : rows) {
    const auto& b = r.box;
    os << to_string(r.strategy) << ',' << r.n << ',' << r.l << ',' << format_double(r.jz) << ',' << r.trials << ','
       << r.failed << ',' << format_double(r.exact) << ',' << format_double(b.mean) << ','
       << format_double(b.median) << ',' << format_double(b.q1) << ',' << format_double(b.q3) << ','
       << format_double(b.iqr) << ',' << format_double(b.lower_fence) << ',' << format_double(b.upper_fence) << ','
       << format_double(b.whisker_low) << ',' << format_double(b.whisker_high) << ',' << b.outliers.size() << ','
       << format_double(r.best) << ',' << format_double(b.max) << ',' << format_double(r.success_fraction) << ','
       << format_double(r.mean_relative_error) << '\n';
  }
}

void write_distribution_csv(std::ostream& os, StrategyKind strategy, int l, double jz,
                            const std::vector<std::pair<double, double>>& dist) {
  for (const auto& [e, f] : dist)
    os << to_string(strategy) << ',' << l << ',' << format_double(jz) << ',' << format_double(e) << ','
       << format_double(f) << '\n';
}

void write_variance_csv_header(std::ostream& os) { os << "n,l,density,variance,std_error,occurrences\n"; }

void write_variance_rows(std::ostream& os, int n, int l, const std::vector<VariancePoint>& points) {
  for (const auto& p : points)
    os << n << ',' << l << ',' << format_double(p.density) << ',' << format_double(p.variance) << ','
       << format_double(p.std_error) << ',' << p.occurrences << '\n';
}

void write_transition_csv(std::ostream& os, const std::vector<TransitionCurve>& curves) {
  os << "L,p,blocks,samples,mean_S,stderr\n";
  for (const auto& c : curves)
    os << c.L << ',' << format_double(c.p) << ',' << c.blocks << ',' << c.samples << ',' << format_double(c.mean)
       << ',' << format_double(c.std_error) << '\n';
}

std::vector<TransitionCurve> read_transition_csv(std::istream& is) {
  const CsvTable t = read_csv(is);
  const std::size_t cL = t.column("L"), cp = t.column("p"), cb = t.column("blocks"), cs = t.column("samples"),
                    cm = t.column("mean_S"), ce = t.column("stderr");
  std::vector<TransitionCurve> out;
  for (const auto& row : t.rows) {
    TransitionCurve c;
    c.L = std::stoi(row[cL]);
    c.p = parse_double(row[cp]);
    c.blocks = std::stoi(row[cb]);
    c.samples = std::stoi(row[cs]);
    c.mean = parse_double(row[cm]);
    c.std_error = parse_double(row[ce]);
    out.push_back(c);
  }
  return out;
}

void write_collapse_csv(std::ostream& os, const CollapseResult& result) {
  os << "# best_nu " << format_double(result.nu) << " cost " << format_double(result.cost) << " degenerate "
     << (result.degenerate ? "true" : "false") << '\n';
  os << "nu,cost\n";
  for (std::size_t k = 0; k < result.nu_grid.size(); ++k)
    os << format_double(result.nu_grid[k]) << ',' << format_double(result.costs[k]) << '\n';
}

void write_box_csv(std::ostream& os, const BoxStats& b, std::size_t count, std::optional<double> exact) {
  os << "count,min,q1,median,q3,max,mean,iqr,lower_fence,upper_fence,whisker_low,whisker_high,outliers";
  if (exact) os << ",exact,mean_relative_error";
  os << '\n';
  os << count << ',' << format_double(b.min) << ',' << format_double(b.q1) << ',' << format_double(b.median) << ','
     << format_double(b.q3) << ',' << format_double(b.max) << ',' << format_double(b.mean) << ','
     << format_double(b.iqr) << ',' << format_double(b.lower_fence) << ',' << format_double(b.upper_fence) << ','
     << format_double(b.whisker_low) << ',' << format_double(b.whisker_high) << ',' << b.outliers.size();
  if (exact) os << ',' << format_double(*exact) << ',' << format_double(relative_error(b.mean, *exact));
  os << '\n';
}

}  // namespace ravqe
