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

#include "ravqe/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ravqe {

std::string to_string(QuartileConvention c) {
  return c == QuartileConvention::Exclusive ? "exclusive" : "inclusive";
}

QuartileConvention quartile_convention_from_string(const std::string& s) {
  if (s == "inclusive") return QuartileConvention::Inclusive;
  if (s == "exclusive") return QuartileConvention::Exclusive;
  throw std::invalid_argument("unknown quartile convention '" + s + "' (expected inclusive or exclusive)");
}

namespace {

double median_sorted(std::span<const double> v) {
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double mean_of(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean_of: empty input");
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double m = mean_of(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return ss / static_cast<double>(values.size() - 1);
}

BoxStats box_stats(std::span<const double> values, QuartileConvention convention) {
  if (values.empty()) throw std::invalid_argument("box_stats: empty input");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("box_stats: non-finite value");
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();

  BoxStats b;
  b.min = s.front();
  b.max = s.back();
  b.mean = mean_of(s);
  b.median = median_sorted(s);
  if (n == 1) {
    b.q1 = b.q3 = s[0];
  } else {
    const std::size_t half = n / 2;
    const bool keep_mid = n % 2 == 1 && convention == QuartileConvention::Inclusive;
    const std::size_t len = keep_mid ? half + 1 : half;
    b.q1 = median_sorted(std::span<const double>(s).first(len));
    b.q3 = median_sorted(std::span<const double>(s).last(len));
  }
  b.iqr = b.q3 - b.q1;
  b.lower_fence = b.q1 - 1.5 * b.iqr;
  b.upper_fence = b.q3 + 1.5 * b.iqr;
  b.whisker_low = b.max;
  b.whisker_high = b.min;
  for (double v : s) {
    if (v < b.lower_fence || v > b.upper_fence) {
      b.outliers.push_back(v);
    } else {
      b.whisker_low = std::min(b.whisker_low, v);
      b.whisker_high = std::max(b.whisker_high, v);
    }
  }
  return b;
}

std::vector<std::pair<double, double>> accumulated_distribution(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("accumulated_distribution: empty input");
  std::vector<double> s(values.begin(), values.end());
  std::sort(s.begin(), s.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(s.size());
  const double n = static_cast<double>(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out.emplace_back(s[k], static_cast<double>(k + 1) / n);
  return out;
}

double relative_error(double e, double e_exact) {
  if (e_exact == 0.0) throw std::invalid_argument("relative_error: exact value is zero");
  return (e - e_exact) / std::abs(e_exact);
}

}  // namespace ravqe
