// Copyright 2026 The Chernoff Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded simulation of the three sampling models: iid Bernoulli sums,
// heterogeneous Bernoulli sums and draws from an urn without replacement.
//
// Trial j always consumes StreamRng(seed, j), and per-thread results are
// combined with commutative counts, so every output is independent of the
// thread count.

#ifndef CHERNOFF_MONTECARLO_H_
#define CHERNOFF_MONTECARLO_H_

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "chernoff/oracles.h"

namespace chernoff {

// Total Bernoulli or urn draws allowed per simulation.
inline constexpr std::uint64_t kMaxSimulationDraws = 1'000'000'000;

struct IidModel {
  std::int64_t n = 1;
  double p = 0.5;
};

struct HeterogeneousModel {
  std::vector<double> p_list;
};

using SampleModel = std::variant<IidModel, HeterogeneousModel, UrnSpec>;

struct SimulationSpec {
  SampleModel model;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  void Validate() const;
  // Number of variables per trial.
  std::int64_t Size() const;
  // p for the bound formulas: p, mean of p_list, or red / population.
  double MeanParameter() const;
};

const char* ModelName(const SampleModel& model);

struct EmpiricalTail {
  std::int64_t k = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// `threads` = 0 picks std::thread::hardware_concurrency().
std::vector<std::int64_t> SimulateSum(const SimulationSpec& spec,
                                      unsigned threads = 0);

// counts[s] = number of trials whose sum is s, s = 0..Size().
std::vector<std::uint64_t> SimulateHistogram(const SimulationSpec& spec,
                                             unsigned threads = 0);

EmpiricalTail EmpiricalTailFromHistogram(
    std::span<const std::uint64_t> histogram, std::int64_t k,
    std::uint64_t seed);

EmpiricalTail EmpiricalTailOf(const SimulationSpec& spec, std::int64_t k,
                              unsigned threads = 0);

// Per-position red counts over `trials` urn samples: counts[i] is how often
// the i-th draw was red.
std::vector<std::uint64_t> UrnPositionCounts(const UrnSpec& urn,
                                             std::uint64_t trials,
                                             std::uint64_t seed,
                                             unsigned threads = 0);

// Exact tail for the model: binomial, Poisson-binomial or hypergeometric.
double ExactModelTail(const SampleModel& model, std::int64_t k);

struct ScorecardRow {
  double t = 0.0;
  std::int64_t k = 0;
  double exact = 0.0;
  double empirical = 0.0;
  double empirical_standard_error = 0.0;
  double kl = 1.0;
  double multiplicative = 1.0;
  double simplified = 1.0;
  double steinke_ullman = 1.0;

  // bound / exact; +inf when exact is 0.
  double KlTightness() const;
  double MultiplicativeTightness() const;
  double SimplifiedTightness() const;
  double SteinkeUllmanTightness() const;
};

// One row per deviation t (upper tail, threshold k = ceil((p + t) n)). The
// multiplicative columns use mu = pn and delta = t / p.
std::vector<ScorecardRow> BoundScorecard(const SimulationSpec& spec,
                                         std::span<const double> deviations,
                                         unsigned threads = 0);

}  // namespace chernoff

#endif  // CHERNOFF_MONTECARLO_H_
