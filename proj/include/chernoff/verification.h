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

// Invariant suites: grid sweeps that pit the bound evaluators and
// mechanisms against the exact oracles. Each suite returns a report with a
// check count, a failure count and the smallest slack seen.

#ifndef CHERNOFF_VERIFICATION_H_
#define CHERNOFF_VERIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chernoff/log_math.h"

namespace chernoff {

class SuiteReport {
 public:
  explicit SuiteReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  double worst_slack() const { return worst_slack_; }
  const std::string& first_failure() const { return first_failure_; }
  bool passed() const { return failures_ == 0; }

  // Records a check that passes iff `slack >= -tolerance`. `describe` is
  // only invoked for the first failure.
  template <typename Describe>
  void ExpectSlack(double slack, double tolerance, Describe&& describe) {
    ++checks_;
    if (slack < worst_slack_) worst_slack_ = slack;
    if (!(slack >= -tolerance)) Fail(describe());
  }

  template <typename Describe>
  void Expect(bool ok, Describe&& describe) {
    ++checks_;
    if (!ok) Fail(describe());
  }

  void Merge(const SuiteReport& other);

 private:
  void Fail(std::string description);

  std::string name_;
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  double worst_slack_ = kInf;
  std::string first_failure_;
};

struct DominationConfig {
  std::vector<std::int64_t> ns = {1, 2, 5, 10, 20, 50, 100, 200};
  // p = 0.05, 0.10, ..., 0.95.
  int p_steps = 19;
  // t = j (1 - p) / t_steps, j = 0..t_steps.
  int t_steps = 20;
  double tolerance = 1e-12;
};

// exact <= KL <= multiplicative <= simplified on the upper tail.
SuiteReport RunDominationSuite(const DominationConfig& config);

// e^{1 - t^2 n / 64} >= exact tail on the domination grid.
SuiteReport RunSteinkeUllmanSuite(const DominationConfig& config);

struct OptimalityConfig {
  std::int64_t n = 100;
  int p_steps = 19;
  // Interior t = j (1 - p) / (t_steps + 1), j = 1..t_steps.
  int t_steps = 12;
  int perturbations = 20;
  double agreement_tolerance = 1e-10;  // relative
  double optimality_tolerance = 1e-12;
  std::uint64_t seed = 0;
};

// Both parametric bounds at their optimal lambda equal the KL bound, and
// beat random perturbations of lambda.
SuiteReport RunOptimalitySuite(const OptimalityConfig& config);

// Lower-tail reduction identity, multiplicative dominance on both tails,
// simplified lower/two-sided forms against the exact tail, and the absolute
// threshold bound.
SuiteReport RunRelaxationSuite();

struct HypergeometricConfig {
  std::int64_t claims_max_population = 60;
  std::vector<double> taus = {1.0, 1.5, 2.0, 4.0};
  std::vector<std::int64_t> populations = {5, 10, 25, 50, 100, 200, 300};
  int t_steps = 20;
  double tolerance = 1e-12;
};

// Urn moment identities on every urn with population <= claims_max_population, and
// the KL bound against exact hypergeometric tails.
SuiteReport RunHypergeometricSuite(const HypergeometricConfig& config);

// Enumerated E[prod_{i in I} X_i] against (lambda p + 1 - lambda)^n.
SuiteReport RunEq2Suite(int max_n, double tolerance = 1e-12);

struct ValidWeightConfig {
  int min_n = 2;
  int max_n = 12;
  int weight_functions = 100;
  std::vector<double> s_values = {1.0, 2.0, 10.0, 100.0};
  std::uint64_t seed = 0;
};

// Pr[w(x) >= s p_x] <= 1/s for random valid weight functions on random and
// product joints, plus the 1/4 equality edge.
SuiteReport RunValidWeightSuite(const ValidWeightConfig& config);

// Encoding weights form a probability measure, the likelihood ratio grows
// with k and clears e^{n D} above the threshold, and the enumerated tail
// respects the KL bound.
SuiteReport RunEncodingSuite(int max_n);

struct SelectorConfig {
  int cases = 1000;
  int max_rows = 16;
  int max_cols = 16;
  std::vector<double> gammas = {1.1, 2.0, 10.0};
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
};

// Normalization, monotonicity, stability (ratios and normalizer shift) and
// accuracy gap on random matrices; sampler frequencies on a fixed law.
SuiteReport RunSelectorSuite(const SelectorConfig& config);

struct MaxExpectationConfig {
  std::int64_t max_n = 300;
  std::vector<double> ps = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<std::int64_t> ms = {2, 4, 16, 256};
  std::vector<double> fixed_gammas = {1.1, 1.5, 2.0};
  double tolerance = 1e-12;
};

// E[max] <= pn + 5 sqrt(n ln m) and E[max] <= gamma^2 pn + ln m / ln gamma,
// plus the Markov step for the selector accuracy at m = ceil(m*).
SuiteReport RunMaxExpectationSuite(const MaxExpectationConfig& config);

struct NegativeCorrelationConfig {
  std::int64_t max_population = 20;
  int max_draws = 8;
  int t_steps = 20;
  double tolerance = 1e-12;
};

// Urn indicators are negatively correlated and their exact tail respects the
// KL bound at p = red / population; perfectly correlated bits are rejected.
SuiteReport RunNegativeCorrelationSuite(
    const NegativeCorrelationConfig& config);

// KL nonnegativity, symmetry, monotonicity and edge values.
SuiteReport RunDivergenceSuite();

// Binomial upper + lower tails sum to one; joint tails of product laws match
// the binomial tail.
SuiteReport RunOracleConsistencySuite();

struct MonteCarloConfig {
  int cases = 50;
  std::uint64_t trials = 100'000;
  int required_within = 49;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

// Empirical tails within 4 standard errors of the exact oracle, thread-count
// invariance, scorecard bound validity and urn exchangeability.
SuiteReport RunMonteCarloSuite(const MonteCarloConfig& config);

struct SuiteOptions {
  std::optional<std::int64_t> max_n;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
};

// Names accepted by RunNamedSuite, excluding "all".
const std::vector<std::string>& SuiteNames();
bool SuiteNeedsSeed(const std::string& name);

// Runs one named suite, or every suite for "all". Throws DomainError for an
// unknown name or a missing seed.
std::vector<SuiteReport> RunNamedSuite(const std::string& name,
                                       const SuiteOptions& options);

}  // namespace chernoff

#endif  // CHERNOFF_VERIFICATION_H_
