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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ravqe {

/// Which halves the quartiles are medians of, for odd counts.
/// Inclusive (Tukey hinges) keeps the median in both halves; Exclusive drops it.
enum class QuartileConvention : std::uint8_t { Inclusive, Exclusive };
std::string to_string(QuartileConvention c);
QuartileConvention quartile_convention_from_string(const std::string& s);

struct BoxStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double iqr = 0.0;
  double lower_fence = 0.0;  // Q1 - 1.5 IQR
  double upper_fence = 0.0;  // Q3 + 1.5 IQR
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  std::vector<double> outliers;  // ascending
};

BoxStats box_stats(std::span<const double> values,
                   QuartileConvention convention = QuartileConvention::Inclusive);

/// Sorted values paired with k / N, k = 1..N.
std::vector<std::pair<double, double>> accumulated_distribution(std::span<const double> values);

/// (e - e_exact) / |e_exact|.
double relative_error(double e, double e_exact);

double mean_of(std::span<const double> values);

/// Unbiased sample variance; 0 for fewer than two values.
double sample_variance(std::span<const double> values);

}  // namespace ravqe
