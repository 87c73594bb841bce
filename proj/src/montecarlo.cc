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

#include "chernoff/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "chernoff/bounds.h"
#include "chernoff/errors.h"
#include "chernoff/log_math.h"
#include "chernoff/random.h"

namespace chernoff {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

unsigned ResolveThreads(unsigned requested, std::uint64_t trials) {
  unsigned threads = requested;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
}

// Splits [0, trials) into contiguous chunks, one per worker, and runs
// body(worker, begin, end) for each chunk.
template <typename Body>
void ParallelChunks(std::uint64_t trials, unsigned threads, Body&& body) {
  const unsigned workers = ResolveThreads(threads, trials);
  if (workers == 1) {
    body(0u, std::uint64_t{0}, trials);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(trials, w * chunk);
    const std::uint64_t end = std::min(trials, begin + chunk);
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

// Draws one trial of the model and returns its sum. The urn scratch array
// holds the current permutation and is restored before returning.
class TrialSampler {
 public:
  TrialSampler(const SampleModel& model, std::uint64_t seed)
      : model_(model), seed_(seed) {
    if (const auto* urn = std::get_if<UrnSpec>(&model_)) {
      balls_.assign(static_cast<std::size_t>(urn->population), 0);
      std::fill_n(balls_.begin(), urn->red, 1);
      swaps_.resize(static_cast<std::size_t>(urn->draws));
    }
  }

  // `on_draw(i, success)` is invoked for every variable of the trial.
  template <typename OnDraw>
  std::int64_t Run(std::uint64_t trial, OnDraw&& on_draw) {
    StreamRng rng(seed_, trial);
    return std::visit(
        Overloaded{
            [&](const IidModel& m) {
              std::int64_t sum = 0;
              for (std::int64_t i = 0; i < m.n; ++i) {
                const bool success = rng.Uniform() < m.p;
                on_draw(i, success);
                sum += success;
              }
              return sum;
            },
            [&](const HeterogeneousModel& m) {
              std::int64_t sum = 0;
              for (std::size_t i = 0; i < m.p_list.size(); ++i) {
                const bool success = rng.Uniform() < m.p_list[i];
                on_draw(static_cast<std::int64_t>(i), success);
                sum += success;
              }
              return sum;
            },
            [&](const UrnSpec& urn) {
              // Partial Fisher-Yates: position i receives a uniform ball
              // among the N - i not yet drawn.
              std::int64_t sum = 0;
              const auto population = static_cast<std::uint64_t>(urn.population);
              for (std::int64_t i = 0; i < urn.draws; ++i) {
                const auto pick = static_cast<std::size_t>(
                    i + static_cast<std::int64_t>(rng.Below(population - i)));
                std::swap(balls_[i], balls_[pick]);
                swaps_[i] = pick;
                const bool success = balls_[i] != 0;
                on_draw(i, success);
                sum += success;
              }
              for (std::int64_t i = urn.draws - 1; i >= 0; --i) {
                std::swap(balls_[i], balls_[swaps_[i]]);
              }
              return sum;
            },
        },
        model_);
  }

  std::int64_t Run(std::uint64_t trial) {
    return Run(trial, [](std::int64_t, bool) {});
  }

 private:
  const SampleModel& model_;
  std::uint64_t seed_;
  std::vector<std::uint8_t> balls_;
  std::vector<std::size_t> swaps_;
};

void CheckDrawBudget(std::uint64_t trials, std::int64_t size) {
  const auto per_trial = static_cast<std::uint64_t>(size);
  if (per_trial != 0 && trials > kMaxSimulationDraws / per_trial) {
    throw ResourceError("simulation exceeds " +
                        std::to_string(kMaxSimulationDraws) + " draws");
  }
}

double Tightness(double bound, double exact) {
  return exact == 0.0 ? kInf : bound / exact;
}

}  // namespace

void SimulationSpec::Validate() const {
  if (trials < 1) throw DomainError("simulation needs trials >= 1");
  std::visit(Overloaded{
                 [](const IidModel& m) {
                   if (m.n < 1) throw DomainError("iid model needs n >= 1");
                   if (!(m.p >= 0.0 && m.p <= 1.0)) {
                     throw DomainError("iid model needs p in [0, 1]");
                   }
                 },
                 [](const HeterogeneousModel& m) { chernoff::MeanParameter(m.p_list); },
                 [](const UrnSpec& urn) {
                   urn.Validate();
                   if (urn.draws < 1) throw DomainError("urn needs draws >= 1");
                 },
             },
             model);
  CheckDrawBudget(trials, Size());
}

std::int64_t SimulationSpec::Size() const {
  return std::visit(
      Overloaded{
          [](const IidModel& m) { return m.n; },
          [](const HeterogeneousModel& m) {
            return static_cast<std::int64_t>(m.p_list.size());
          },
          [](const UrnSpec& urn) { return urn.draws; },
      },
      model);
}

double SimulationSpec::MeanParameter() const {
  return std::visit(
      Overloaded{
          [](const IidModel& m) { return m.p; },
          [](const HeterogeneousModel& m) {
            return chernoff::MeanParameter(m.p_list);
          },
          [](const UrnSpec& urn) { return urn.p(); },
      },
      model);
}

const char* ModelName(const SampleModel& model) {
  return std::visit(Overloaded{
                        [](const IidModel&) { return "iid"; },
                        [](const HeterogeneousModel&) { return "heterogeneous"; },
                        [](const UrnSpec&) { return "urn"; },
                    },
                    model);
}

std::vector<std::int64_t> SimulateSum(const SimulationSpec& spec,
                                      unsigned threads) {
  spec.Validate();
  std::vector<std::int64_t> sums(spec.trials);
  ParallelChunks(spec.trials, threads,
                 [&](unsigned, std::uint64_t begin, std::uint64_t end) {
                   TrialSampler sampler(spec.model, spec.seed);
                   for (std::uint64_t j = begin; j < end; ++j) {
                     sums[j] = sampler.Run(j);
                   }
                 });
  return sums;
}

std::vector<std::uint64_t> SimulateHistogram(const SimulationSpec& spec,
                                             unsigned threads) {
  spec.Validate();
  const auto bins = static_cast<std::size_t>(spec.Size()) + 1;
  const unsigned workers = ResolveThreads(threads, spec.trials);
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(bins, 0));
  ParallelChunks(spec.trials, workers,
                 [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                   TrialSampler sampler(spec.model, spec.seed);
                   for (std::uint64_t j = begin; j < end; ++j) {
                     ++partial[w][static_cast<std::size_t>(sampler.Run(j))];
                   }
                 });
  std::vector<std::uint64_t> histogram(bins, 0);
  for (const auto& part : partial) {
    for (std::size_t s = 0; s < bins; ++s) histogram[s] += part[s];
  }
  return histogram;
}

EmpiricalTail EmpiricalTailFromHistogram(
    std::span<const std::uint64_t> histogram, std::int64_t k,
    std::uint64_t seed) {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  for (std::size_t s = 0; s < histogram.size(); ++s) {
    trials += histogram[s];
    if (static_cast<std::int64_t>(s) >= k) hits += histogram[s];
  }
  if (trials == 0) throw DomainError("empty histogram");
  EmpiricalTail tail;
  tail.k = k;
  tail.trials = trials;
  tail.seed = seed;
  tail.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  tail.standard_error = std::sqrt(tail.estimate * (1.0 - tail.estimate) /
                                  static_cast<double>(trials));
  return tail;
}

EmpiricalTail EmpiricalTailOf(const SimulationSpec& spec, std::int64_t k,
                              unsigned threads) {
  const auto histogram = SimulateHistogram(spec, threads);
  return EmpiricalTailFromHistogram(histogram, k, spec.seed);
}

std::vector<std::uint64_t> UrnPositionCounts(const UrnSpec& urn,
                                             std::uint64_t trials,
                                             std::uint64_t seed,
                                             unsigned threads) {
  const SimulationSpec spec{urn, trials, seed};
  spec.Validate();
  const auto positions = static_cast<std::size_t>(urn.draws);
  const unsigned workers = ResolveThreads(threads, trials);
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(positions, 0));
  ParallelChunks(trials, workers,
                 [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                   TrialSampler sampler(spec.model, seed);
                   auto& counts = partial[w];
                   for (std::uint64_t j = begin; j < end; ++j) {
                     sampler.Run(j, [&counts](std::int64_t i, bool success) {
                       counts[static_cast<std::size_t>(i)] += success;
                     });
                   }
                 });
  std::vector<std::uint64_t> counts(positions, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < positions; ++i) counts[i] += part[i];
  }
  return counts;
}

double ExactModelTail(const SampleModel& model, std::int64_t k) {
  return std::visit(
      Overloaded{
          [k](const IidModel& m) {
            if (k > m.n) return 0.0;
            return ExactBinomialTail({m.n, m.p}, std::max<std::int64_t>(k, 0),
                                     Direction::kUpper);
          },
          [k](const HeterogeneousModel& m) {
            const auto n = static_cast<std::int64_t>(m.p_list.size());
            if (k > n) return 0.0;
            return ExactPoissonBinomialTail(m.p_list,
                                            std::max<std::int64_t>(k, 0));
          },
          [k](const UrnSpec& urn) {
            if (k > urn.draws) return 0.0;
            return ExactHypergeometricTail(urn, std::max<std::int64_t>(k, 0));
          },
      },
      model);
}

double ScorecardRow::KlTightness() const { return Tightness(kl, exact); }
double ScorecardRow::MultiplicativeTightness() const {
  return Tightness(multiplicative, exact);
}
double ScorecardRow::SimplifiedTightness() const {
  return Tightness(simplified, exact);
}
double ScorecardRow::SteinkeUllmanTightness() const {
  return Tightness(steinke_ullman, exact);
}

std::vector<ScorecardRow> BoundScorecard(const SimulationSpec& spec,
                                         std::span<const double> deviations,
                                         unsigned threads) {
  spec.Validate();
  if (deviations.empty()) throw DomainError("scorecard needs at least one t");
  const std::int64_t n = spec.Size();
  const double p = spec.MeanParameter();
  const double mu = p * static_cast<double>(n);
  for (double t : deviations) {
    // Reject inadmissible deviations before spending time on simulation.
    KlTailBound({n, p, t, Direction::kUpper});
  }
  const auto histogram = SimulateHistogram(spec, threads);

  std::vector<ScorecardRow> rows;
  rows.reserve(deviations.size());
  for (double t : deviations) {
    ScorecardRow row;
    row.t = t;
    row.k = UpperThreshold(n, p, t);
    row.exact = ExactModelTail(spec.model, row.k);
    const EmpiricalTail empirical =
        EmpiricalTailFromHistogram(histogram, row.k, spec.seed);
    row.empirical = empirical.estimate;
    row.empirical_standard_error = empirical.standard_error;
    row.kl = KlTailBound({n, p, t, Direction::kUpper}).value;
    if (mu > 0.0) {
      const MultiplicativeQuery query{mu, t / p, Direction::kUpper, n};
      row.multiplicative = MultiplicativeBound(query).value;
      row.simplified = SimplifiedBound(query).value;
    }
    row.steinke_ullman = SteinkeUllmanBound(n, std::min(t, 1.0)).value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chernoff
