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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ravqe/harness.hpp"
#include "ravqe/transition.hpp"

namespace ravqe {

std::string version_string();

nlohmann::json to_json(const OptimizerConfig& c);
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j);

/// One JSON-lines record. With an exact energy the relative error is appended.
nlohmann::json to_json(const TrialRecord& r, std::optional<double> exact = std::nullopt);
TrialRecord trial_record_from_json(const nlohmann::json& j);

/// First line of every JSON-lines file: {"kind":"header", "version", "config"}.
void write_jsonl_header(std::ostream& os, const nlohmann::json& config);
void write_jsonl_record(std::ostream& os, const TrialRecord& r, std::optional<double> exact = std::nullopt);
/// Trial records of a JSON-lines file, header skipped.
std::vector<TrialRecord> read_jsonl_records(std::istream& is);

/// "%.17g", with nan and inf spelled out.
std::string format_double(double v);

/// Leading comment lines of every CSV: version and resolved config.
void write_csv_preamble(std::ostream& os, const nlohmann::json& config);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
};

/// Comma-separated, no quoting; lines starting with '#' are skipped.
CsvTable read_csv(std::istream& is);

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);
void write_distribution_csv(std::ostream& os, StrategyKind strategy, int l, double jz,
                            const std::vector<std::pair<double, double>>& dist);
void write_variance_csv_header(std::ostream& os);
void write_variance_rows(std::ostream& os, int n, int l, const std::vector<VariancePoint>& points);
void write_transition_csv(std::ostream& os, const std::vector<TransitionCurve>& curves);
std::vector<TransitionCurve> read_transition_csv(std::istream& is);
void write_collapse_csv(std::ostream& os, const CollapseResult& result);
void write_box_csv(std::ostream& os, const BoxStats& b, std::size_t count, std::optional<double> exact);

}  // namespace ravqe
