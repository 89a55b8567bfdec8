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

#include "ravqe/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "ravqe/circuit.hpp"
#include "ravqe/density_matrix.hpp"
#include "ravqe/gradients.hpp"
#include "ravqe/rng.hpp"
#include "ravqe/statevector.hpp"

namespace ravqe {

std::string to_string(BackendKind k) { return k == BackendKind::DensityMatrix ? "density" : "statevector"; }

BackendKind backend_kind_from_string(const std::string& s) {
  if (s == "statevector") return BackendKind::Statevector;
  if (s == "density") return BackendKind::DensityMatrix;
  throw std::invalid_argument("unknown backend '" + s + "' (expected statevector or density)");
}

void TrialConfig::validate() const {
  strategy.validate();
  optimizer.validate();
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("trials: n must be even and >= 4");
  if (l < 1) throw std::invalid_argument("trials: l must be >= 1");
  if (!std::isfinite(jz)) throw std::invalid_argument("trials: jz must be finite");
  if (trials < 1) throw std::invalid_argument("trials: trials must be >= 1");
  if (workers < 1) throw std::invalid_argument("trials: workers must be >= 1");
  if (trajectory_every < 1) throw std::invalid_argument("trials: trajectory_every must be >= 1");
  if (!(p_noise >= 0.0 && p_noise <= 1.0)) throw std::invalid_argument("trials: p_noise must lie in [0, 1]");
  if (backend == BackendKind::DensityMatrix && n > kMaxDensityQubits)
    throw std::invalid_argument("trials: density-matrix backend supports n <= " + std::to_string(kMaxDensityQubits));
  if (backend == BackendKind::Statevector && p_noise != 0.0)
    throw std::invalid_argument("trials: noise requires the density-matrix backend");
  if (optimizer.maxiter < stage_count(strategy, CircuitLayout(n, l)))
    throw std::invalid_argument("trials: maxiter must be >= the number of activation stages");
}

std::uint64_t trial_seed(std::uint64_t master, int index) {
  return derive_seed(master, static_cast<std::uint64_t>(index), "trial");
}

namespace {

class TrialEvaluator {
 public:
  explicit TrialEvaluator(const TrialConfig& c)
      : layout_(c.n, c.l), obs_(build_xxz(c.n, c.jz)), init_(init_singlet_chain(c.n)) {
    if (c.backend == BackendKind::DensityMatrix) dm_.emplace(layout_, obs_, c.p_noise);
  }

  const CircuitLayout& layout() const { return layout_; }

  EnergyGradient energy_and_gradient(const ParameterVector& params, const ActivationMask& mask) const {
    if (!dm_) return reverse_sweep_gradient(layout_, params, mask, obs_, init_);
    EnergyGradient out;
    out.energy = dm_->energy(params, mask);
    out.grad = parameter_shift_gradient(*dm_, params, mask);
    return out;
  }

  double energy(const ParameterVector& params, const ActivationMask& mask) const {
    if (!dm_) return circuit_energy(layout_, params, mask, obs_, init_);
    return dm_->energy(params, mask);
  }

 private:
  CircuitLayout layout_;
  Observable obs_;
  StateVector init_;
  std::optional<DensityMatrixBackend> dm_;
};

}  // namespace

TrialRecord run_trial(const TrialConfig& config, int index) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed(config.seed, index);
  rec.strategy = config.strategy.kind;
  rec.n = config.n;
  rec.l = config.l;
  rec.jz = config.jz;
  rec.optimizer = config.optimizer;

  const TrialEvaluator eval(config);
  std::mt19937_64 rng(rec.seed);
  ScheduleInit init = init_schedule(config.strategy, eval.layout(), rng);
  ParameterVector& params = init.params;
  SchedulerState& sched = init.state;
  OptimizerState opt(params.size());
  ActivationClock clock(config.strategy.trigger, config.optimizer.maxiter, sched.stages);

  std::vector<double> energies;
  energies.reserve(config.optimizer.maxiter);
  for (int t = 0; t < config.optimizer.maxiter; ++t) {
    EnergyGradient eg = eval.energy_and_gradient(params, sched.mask);
    energies.push_back(eg.energy);
    if (t % config.trajectory_every == 0) rec.trajectory.emplace_back(t, eg.energy);

    const int due = clock.due(t, energies);
    bool changed = false;
    for (int k = 0; k < due; ++k) {
      const double before = changed ? rec.events.back().energy_after : eg.energy;
      if (!advance(sched, config.strategy, eval.layout(), params)) break;
      changed = true;
      rec.events.push_back({t, before, eval.energy(params, sched.mask), sched.mask.count()});
    }
    if (changed) eg = eval.energy_and_gradient(params, sched.mask);

    rec.evaluations += 2 * static_cast<std::uint64_t>(sched.mask.count());
    step(opt, config.optimizer, params, eg.grad, sched.mask);
  }
  rec.final_energy = eval.energy(params, sched.mask);
  if (config.timing)
    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<TrialRecord> run_trials(const TrialConfig& config) {
  config.validate();
  std::vector<TrialRecord> out(config.trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.workers)
  for (int k = 0; k < config.trials; ++k) {
    try {
      out[k] = run_trial(config, k);
    } catch (const std::exception& e) {
      TrialRecord failed;
      failed.index = k;
      failed.seed = trial_seed(config.seed, k);
      failed.strategy = config.strategy.kind;
      failed.n = config.n;
      failed.l = config.l;
      failed.jz = config.jz;
      failed.optimizer = config.optimizer;
      failed.accounting = false;
      failed.error = e.what();
      out[k] = std::move(failed);
    }
  }
  return out;
}

std::uint64_t shift_evaluation_counter(const TrialRecord& record) {
  if (!record.accounting) throw std::logic_error("shift_evaluation_counter: accounting disabled for this trial");
  return record.evaluations;
}

std::vector<double> final_energies(const std::vector<TrialRecord>& records) {
  std::vector<double> out;
  for (const auto& r : records)
    if (r.ok()) out.push_back(r.final_energy);
  return out;
}

SummaryRow summarize(const TrialConfig& config, const std::vector<TrialRecord>& records, double exact,
                     QuartileConvention convention) {
  SummaryRow row;
  row.strategy = config.strategy.kind;
  row.n = config.n;
  row.l = config.l;
  row.jz = config.jz;
  row.trials = records.size();
  row.exact = exact;
  const auto e = final_energies(records);
  row.failed = records.size() - e.size();
  if (e.empty()) throw std::runtime_error("summarize: every trial failed");
  row.box = box_stats(e, convention);
  row.best = row.box.min;
  std::size_t hits = 0;
  double rel = 0.0;
  for (double v : e) {
    const double r = relative_error(v, exact);
    rel += r;
    if (r <= kSuccessTolerance) ++hits;
  }
  row.success_fraction = static_cast<double>(hits) / static_cast<double>(e.size());
  row.mean_relative_error = rel / static_cast<double>(e.size());
  return row;
}

namespace {

struct SlotSums {
  std::vector<double> s1, s2;
  std::vector<std::size_t> count;
  explicit SlotSums(std::size_t p) : s1(p, 0.0), s2(p, 0.0), count(p, 0) {}
};

// Occurrence-weighted mean of per-slot unbiased variances; slots seen < 2 times skipped.
std::pair<double, std::size_t> weighted_variance(const SlotSums& s) {
  double acc = 0.0;
  std::size_t weight = 0;
  for (std::size_t k = 0; k < s.s1.size(); ++k) {
    const std::size_t c = s.count[k];
    if (c < 2) continue;
    const double mean = s.s1[k] / c;
    const double var = std::max(0.0, (s.s2[k] - c * mean * mean) / static_cast<double>(c - 1));
    acc += static_cast<double>(c) * var;
    weight += c;
  }
  return {weight ? acc / static_cast<double>(weight) : 0.0, weight};
}

}  // namespace

std::vector<VariancePoint> gradient_variance_experiment(const Observable& obs, int l,
                                                        const std::vector<double>& densities,
                                                        int samples, std::uint64_t seed, int workers) {
  if (samples < 2) throw std::invalid_argument("gradient_variance: samples must be >= 2");
  if (workers < 1) throw std::invalid_argument("gradient_variance: workers must be >= 1");
  for (double d : densities)
    if (!(d > 0.0 && d <= 1.0)) throw std::invalid_argument("gradient_variance: densities must lie in (0, 1]");
  const int n = obs.n_qubits();
  const CircuitLayout layout(n, l);
  const StateVector init = init_singlet_chain(n);
  const std::size_t p = layout.size();
  const int groups = std::min(samples, 20);

  std::vector<VariancePoint> out;
  for (double d : densities) {
    std::vector<ActivationMask> masks(samples);
    std::vector<Gradient> grads(samples);
    char label[64];
    std::snprintf(label, sizeof label, "bp-variance/%.17g", d);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int s = 0; s < samples; ++s) {
      auto rng = make_rng(seed, static_cast<std::uint64_t>(s), label);
      std::bernoulli_distribution keep(d);
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      ActivationMask mask(p);
      ParameterVector params(p);
      for (std::size_t k = 0; k < p; ++k) {
        if (keep(rng)) {
          mask.set(k);
          params[k] = angle(rng);
        }
      }
      grads[s] = reverse_sweep_gradient(layout, params, mask, obs, init).grad;
      masks[s] = std::move(mask);
    }

    SlotSums total(p);
    std::vector<SlotSums> by_group(groups, SlotSums(p));
    for (int s = 0; s < samples; ++s) {
      SlotSums& g = by_group[s % groups];
      for (std::size_t k = 0; k < p; ++k) {
        if (!masks[s][k]) continue;
        const double v = grads[s][k];
        total.s1[k] += v, total.s2[k] += v * v, ++total.count[k];
        g.s1[k] += v, g.s2[k] += v * v, ++g.count[k];
      }
    }
    VariancePoint pt;
    pt.density = d;
    std::tie(pt.variance, pt.occurrences) = weighted_variance(total);

    std::vector<double> leave_out(groups);
    for (int g = 0; g < groups; ++g) {
      SlotSums rest = total;
      for (std::size_t k = 0; k < p; ++k) {
        rest.s1[k] -= by_group[g].s1[k];
        rest.s2[k] -= by_group[g].s2[k];
        rest.count[k] -= by_group[g].count[k];
      }
      leave_out[g] = weighted_variance(rest).first;
    }
    double jbar = 0.0;
    for (double v : leave_out) jbar += v;
    jbar /= groups;
    double ss = 0.0;
    for (double v : leave_out) ss += (v - jbar) * (v - jbar);
    pt.std_error = std::sqrt(ss * (groups - 1) / groups);
    out.push_back(pt);
  }
  return out;
}

ResourceModel resource_model(std::int64_t p_params, std::int64_t m) {
  if (p_params < 1) throw std::invalid_argument("resource_model: p must be >= 1");
  if (m < 1) throw std::invalid_argument("resource_model: m must be >= 1");
  const double p = static_cast<double>(p_params);
  const double md = static_cast<double>(m);
  ResourceModel r;
  const double log_base = std::log(2.0) + 2.0 * std::log(p);
  r.log_plain = log_base + 2.0 * p;

  // log-sum-exp over k of 2 log(k/m) + 2kp/m; the k = m term is the largest.
  const double top = 2.0 * p;
  double acc = 0.0;
  for (std::int64_t k = 1; k <= m; ++k) {
    const double x = static_cast<double>(k) / md;
    acc += std::exp(2.0 * std::log(x) + 2.0 * p * x - top);
  }
  r.log_ra = log_base + top + std::log(acc) - std::log(md);

  const double q = 2.0 * p * p - 2.0 * p + 1.0;
  r.log_ra_limit = 2.0 * p + std::log(q) + std::log1p(-std::exp(-2.0 * p) / q) - std::log(2.0 * p);
  r.ratio = std::exp(r.log_ra - r.log_plain);
  r.leading_order = 1.0 / (2.0 * p);
  return r;
}

}  // namespace ravqe
