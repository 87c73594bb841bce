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

// Acceptance run: one PASS/FAIL line per criterion. Tolerances, grids, seeds
// and time limits are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chernoff/montecarlo.h"
#include "chernoff/oracles.h"
#include "chernoff/verification.h"
#include "reference.h"

namespace {

using chernoff::SuiteReport;

constexpr std::uint64_t kSeed = 20261015;

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome FromReport(const SuiteReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%llu checks, worst slack %.3g",
                static_cast<unsigned long long>(report.checks()),
                report.worst_slack() == 0.0 ? 0.0 : report.worst_slack());
  std::string detail = buf;
  if (!report.passed()) {
    detail += "; " + std::to_string(report.failures()) +
              " failures, first: " + report.first_failure();
  }
  return {report.passed(), detail};
}

Outcome WithinSeconds(Outcome outcome, double seconds, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "; %.2f s (limit %.0f s)", seconds, limit);
  outcome.detail += buf;
  outcome.passed = outcome.passed && seconds < limit;
  return outcome;
}

Outcome Criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = chernoff::RunDominationSuite({});
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return WithinSeconds(FromReport(report), elapsed.count(), 60.0);
}

Outcome Criterion2() {
  chernoff::OptimalityConfig config;
  config.seed = kSeed;
  const int points = config.p_steps * config.t_steps;
  Outcome outcome = FromReport(chernoff::RunOptimalitySuite(config));
  outcome.detail += "; " + std::to_string(points) + " interior (p, t) points";
  outcome.passed = outcome.passed && points >= 200 && config.perturbations >= 20;
  return outcome;
}

Outcome Criterion3() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = chernoff::RunEq2Suite(10, 1e-12);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return WithinSeconds(FromReport(report), elapsed.count(), 10.0);
}

Outcome Criterion4() {
  chernoff::ValidWeightConfig config;
  config.seed = kSeed;
  return FromReport(chernoff::RunValidWeightSuite(config));
}

Outcome Criterion5() {
  chernoff::SelectorConfig config;
  config.seed = kSeed;
  return FromReport(chernoff::RunSelectorSuite(config));
}

Outcome Criterion6() {
  Outcome outcome = FromReport(chernoff::RunMaxExpectationSuite({}));
  const double spot = chernoff::ExpectedMaxWithFloor({4, 0.5}, 2);
  const double brute =
      static_cast<double>(reference::ExpectedMaxBrute(4, 0.5L, 2));
  outcome.passed = outcome.passed && spot == 2.375 && brute == 2.375;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "; E[max(B(4,1/2),2)] = %.17g", spot);
  outcome.detail += buf;
  return outcome;
}

Outcome Criterion7() {
  Outcome outcome = FromReport(chernoff::RunHypergeometricSuite({}));
  const double spot = chernoff::ExactHypergeometricTail({10, 5, 4}, 3);
  const double want =
      static_cast<double>(reference::HypergeometricTail(10, 5, 4, 3));
  outcome.passed = outcome.passed && std::abs(spot - want) <= 1e-13 &&
                   std::abs(want - 55.0 / 210.0) <= 1e-15;
  return outcome;
}

Outcome Criterion8() {
  return FromReport(chernoff::RunSteinkeUllmanSuite({}));
}

Outcome Criterion9() {
  chernoff::MonteCarloConfig config;
  config.seed = kSeed;
  Outcome outcome = FromReport(chernoff::RunMonteCarloSuite(config));

  // Repeat a full simulation under several thread counts and compare bytes.
  const chernoff::SimulationSpec spec{chernoff::UrnSpec{60, 25, 30}, 100'000,
                                      kSeed};
  const auto reference_sums = chernoff::SimulateSum(spec, 1);
  for (unsigned threads : {1u, 2u, 4u, 16u}) {
    outcome.passed =
        outcome.passed && chernoff::SimulateSum(spec, threads) == reference_sums;
  }
  return outcome;
}

Outcome Criterion10() {
  return FromReport(chernoff::RunNegativeCorrelationSuite({}));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"domination chain exact <= KL <= multiplicative <= simplified",
           Criterion1},
          {"parametric optima coincide with the KL bound", Criterion2},
          {"product expectation enumeration, n <= 10", Criterion3},
          {"valid weight functions, incl. 1/4 equality edge", Criterion4},
          {"stable selector stability, accuracy and (2/3, 1/3)", Criterion5},
          {"expected max of binomial copies, E = 2.375 spot", Criterion6},
          {"urn claims, hypergeometric tails, 55/210 spot", Criterion7},
          {"weak bound e^{1 - t^2 n / 64} validity and spot", Criterion8},
          {"Monte Carlo within 4 SE and thread-count determinism",
           Criterion9},
          {"urn negative correlation and joint-tail domination", Criterion10},
      };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failed;
    std::printf("%s criterion %zu: %s (%s)\n", outcome.passed ? "PASS" : "FAIL",
                i + 1, criteria[i].first, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
