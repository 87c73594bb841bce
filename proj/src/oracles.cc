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

#include "chernoff/oracles.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "chernoff/errors.h"
#include "chernoff/log_math.h"

namespace chernoff {
namespace {

constexpr double kMassTolerance = 1e-12;

void CheckUnit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " +
                      std::to_string(x));
  }
}

// ln Pr[B(n, p) = i] for i = 0..n.
std::vector<double> BinomialLogPmf(const BinomialSpec& spec) {
  const LogFactorialTable table(spec.n);
  const long double log_p = std::log(static_cast<long double>(spec.p));
  const long double log_q = std::log1p(-static_cast<long double>(spec.p));
  std::vector<double> log_pmf(static_cast<std::size_t>(spec.n) + 1);
  for (std::int64_t i = 0; i <= spec.n; ++i) {
    long double v = table.LogChoose(spec.n, i);
    if (i > 0) v += i * log_p;
    if (spec.n - i > 0) v += (spec.n - i) * log_q;
    log_pmf[i] = static_cast<double>(v);
  }
  return log_pmf;
}

double ClampProbability(double x) { return std::clamp(x, 0.0, 1.0); }

// Exact binomial coefficients up to n = 60 fit in the 64-bit mantissa of an
// x87 long double.
std::vector<std::vector<long double>> PascalTriangle(std::int64_t max_n) {
  std::vector<std::vector<long double>> c(max_n + 1);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    c[n].assign(n + 1, 1.0L);
    for (std::int64_t k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
  }
  return c;
}

long double Choose(const std::vector<std::vector<long double>>& c,
                   std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0.0L;
  return c[n][k];
}

}  // namespace

void BinomialSpec::Validate() const {
  if (n < 1) throw DomainError("binomial n must be >= 1");
  CheckUnit(p, "binomial p");
}

void UrnSpec::Validate() const {
  if (population < 1) throw DomainError("urn population must be >= 1");
  if (red < 0 || red > population) {
    throw DomainError("urn red count must lie in [0, population]");
  }
  if (draws < 0 || draws > population) {
    throw DomainError("urn sample size must lie in [0, population]");
  }
}

JointDistribution::JointDistribution(int n, std::vector<double> masses)
    : n_(n), masses_(std::move(masses)) {
  if (n < 1) throw DomainError("joint distribution needs n >= 1");
  if (n > kMaxJointBits) {
    throw ResourceError("joint distribution capped at n = " +
                        std::to_string(kMaxJointBits));
  }
  if (masses_.size() != (std::size_t{1} << n)) {
    throw ShapeError("joint distribution on n bits needs 2^n masses");
  }
  long double total = 0.0L;
  for (double m : masses_) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw DomainError("joint masses must be finite and >= 0");
    }
    total += m;
  }
  if (std::abs(static_cast<double>(total) - 1.0) > kMassTolerance) {
    throw DomainError("joint masses sum to " +
                      std::to_string(static_cast<double>(total)));
  }
}

JointDistribution JointDistribution::Product(std::span<const double> p_list) {
  const int n = static_cast<int>(p_list.size());
  if (n < 1 || n > kMaxJointBits) {
    throw ResourceError("product law needs 1 <= n <= " +
                        std::to_string(kMaxJointBits));
  }
  std::vector<double> masses{1.0};
  masses.reserve(std::size_t{1} << n);
  for (int i = 0; i < n; ++i) {
    CheckUnit(p_list[i], "success probability");
    const std::size_t half = masses.size();
    masses.resize(2 * half);
    for (std::size_t x = 0; x < half; ++x) {
      masses[x + half] = masses[x] * p_list[i];
      masses[x] *= 1.0 - p_list[i];
    }
  }
  return JointDistribution(n, std::move(masses));
}

JointDistribution JointDistribution::UrnIndicators(const UrnSpec& urn) {
  urn.Validate();
  const int n = static_cast<int>(urn.draws);
  if (n < 1 || n > kMaxJointBits) {
    throw ResourceError("urn indicator law needs 1 <= draws <= " +
                        std::to_string(kMaxJointBits));
  }
  // Every sequence with k reds has probability
  // P^(k) (N - P)^(n - k) / N^(n), falling factorials.
  std::vector<double> by_ones(n + 1);
  for (int k = 0; k <= n; ++k) {
    long double prob = 1.0L;
    for (int a = 0; a < k; ++a) prob *= static_cast<long double>(urn.red - a);
    for (int b = 0; b < n - k; ++b) {
      prob *= static_cast<long double>(urn.population - urn.red - b);
    }
    for (int c = 0; c < n; ++c) {
      prob /= static_cast<long double>(urn.population - c);
    }
    by_ones[k] = static_cast<double>(std::max(prob, 0.0L));
  }
  std::vector<double> masses(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < masses.size(); ++x) {
    masses[x] = by_ones[std::popcount(x)];
  }
  return JointDistribution(n, std::move(masses));
}

double ExactBinomialTail(const BinomialSpec& spec, std::int64_t k,
                         Direction direction) {
  spec.Validate();
  if (k < 0 || k > spec.n + 1) {
    throw DomainError("tail index k must lie in [0, n + 1], got " +
                      std::to_string(k));
  }
  if (direction == Direction::kTwoSided) {
    throw UnsupportedError("binomial tail is one-sided");
  }
  if (direction == Direction::kUpper) {
    if (k == 0) return 1.0;
    if (k > spec.n) return 0.0;
  } else if (k >= spec.n) {
    return 1.0;
  }
  const std::vector<double> log_pmf = BinomialLogPmf(spec);
  const std::span<const double> all(log_pmf);
  const auto terms = direction == Direction::kUpper
                         ? all.subspan(static_cast<std::size_t>(k))
                         : all.first(static_cast<std::size_t>(k) + 1);
  return ClampProbability(std::exp(LogSumExp(terms)));
}

std::vector<double> BinomialUpperTailTable(const BinomialSpec& spec) {
  spec.Validate();
  const std::vector<double> log_pmf = BinomialLogPmf(spec);
  std::vector<double> tails(static_cast<std::size_t>(spec.n) + 2, 0.0);
  LogSumAccumulator acc;
  for (std::int64_t k = spec.n; k >= 1; --k) {
    acc.Add(log_pmf[k]);
    tails[k] = ClampProbability(std::exp(acc.Result()));
  }
  tails[0] = 1.0;
  return tails;
}

double ExactHypergeometricTail(const UrnSpec& spec, std::int64_t k) {
  spec.Validate();
  if (k < 0 || k > spec.draws + 1) {
    throw DomainError("tail index k must lie in [0, n + 1], got " +
                      std::to_string(k));
  }
  const std::int64_t lo =
      std::max<std::int64_t>(0, spec.draws - (spec.population - spec.red));
  const std::int64_t hi = std::min(spec.draws, spec.red);
  if (k <= lo) return 1.0;
  if (k > hi) return 0.0;
  const LogFactorialTable table(spec.population);
  const long double log_total = table.LogChoose(spec.population, spec.draws);
  LogSumAccumulator acc;
  for (std::int64_t i = k; i <= hi; ++i) {
    acc.Add(static_cast<double>(
        table.LogChoose(spec.red, i) +
        table.LogChoose(spec.population - spec.red, spec.draws - i) -
        log_total));
  }
  return ClampProbability(std::exp(acc.Result()));
}

double ExactPoissonBinomialTail(std::span<const double> p_list,
                                std::int64_t k) {
  const auto n = static_cast<std::int64_t>(p_list.size());
  if (k < 0 || k > n + 1) {
    throw DomainError("tail index k must lie in [0, n + 1], got " +
                      std::to_string(k));
  }
  if (k == 0) return 1.0;
  std::vector<long double> dist(n + 1, 0.0L);
  dist[0] = 1.0L;
  for (std::int64_t i = 0; i < n; ++i) {
    CheckUnit(p_list[i], "success probability");
    const long double p = p_list[i];
    for (std::int64_t s = i + 1; s >= 1; --s) {
      dist[s] = dist[s] * (1.0L - p) + dist[s - 1] * p;
    }
    dist[0] *= 1.0L - p;
  }
  long double tail = 0.0L;
  for (std::int64_t s = n; s >= k; --s) tail += dist[s];
  return ClampProbability(static_cast<double>(tail));
}

HypergeometricClaimsReport VerifyHypergeometricClaims(const UrnSpec& spec,
                                                      double tau) {
  spec.Validate();
  if (spec.population > kMaxClaimsPopulation) {
    throw ResourceError("claim verification capped at population " +
                        std::to_string(kMaxClaimsPopulation));
  }
  if (!(tau >= 1.0) || !std::isfinite(tau)) {
    throw DomainError("tau must be finite and >= 1");
  }
  static const auto c = PascalTriangle(kMaxClaimsPopulation);
  const std::int64_t big_n = spec.population;
  const std::int64_t red = spec.red;
  const std::int64_t n = spec.draws;
  const long double total = Choose(c, big_n, n);
  const long double p =
      static_cast<long double>(red) / static_cast<long double>(big_n);

  HypergeometricClaimsReport report;
  report.tau = tau;
  report.worst_relative_margin = kInf;
  auto record = [&report](long double lhs, long double rhs) {
    const long double margin = (rhs - lhs) / std::max(1.0L, rhs);
    report.worst_relative_margin =
        std::min(report.worst_relative_margin, static_cast<double>(margin));
  };

  for (std::int64_t j = 0; j <= n; ++j) {
    long double sum = 0.0L;
    for (std::int64_t i = j; i <= n; ++i) {
      sum += Choose(c, red, i) * Choose(c, big_n - red, n - i) * Choose(c, i, j);
    }
    const long double lhs = sum / total;
    const long double rhs = Choose(c, n, j) * std::pow(p, static_cast<int>(j));
    report.claim1_lhs.push_back(static_cast<double>(lhs));
    report.claim1_rhs.push_back(static_cast<double>(rhs));
    record(lhs, rhs);
  }

  long double sum = 0.0L;
  for (std::int64_t i = 0; i <= n; ++i) {
    sum += Choose(c, red, i) * Choose(c, big_n - red, n - i) *
           std::pow(static_cast<long double>(tau), static_cast<int>(i));
  }
  const long double lhs2 = sum / total;
  const long double rhs2 =
      std::pow(1.0L + (tau - 1.0L) * p, static_cast<int>(n));
  report.claim2_lhs = static_cast<double>(lhs2);
  report.claim2_rhs = static_cast<double>(rhs2);
  record(lhs2, rhs2);

  report.holds = report.worst_relative_margin >= -kMassTolerance;
  return report;
}

double IkProductExpectation(int n, double p, double lambda) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (n > kMaxDoubleEnumerationBits) {
    throw ResourceError("pair enumeration capped at n = " +
                        std::to_string(kMaxDoubleEnumerationBits));
  }
  CheckUnit(p, "p");
  CheckUnit(lambda, "lambda");
  // Pr[X = x] and Pr[I = S] depend only on the popcount.
  std::vector<long double> outcome_prob(n + 1);
  std::vector<long double> subset_prob(n + 1);
  for (int k = 0; k <= n; ++k) {
    outcome_prob[k] = std::pow(static_cast<long double>(p), k) *
                      std::pow(1.0L - p, n - k);
    subset_prob[k] = std::pow(static_cast<long double>(lambda), k) *
                     std::pow(1.0L - lambda, n - k);
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  long double expectation = 0.0L;
  for (std::uint32_t x = 0; x < count; ++x) {
    const long double px = outcome_prob[std::popcount(x)];
    for (std::uint32_t s = 0; s < count; ++s) {
      // prod_{i in S} x_i is 1 iff S is a subset of the ones of x.
      if ((s & ~x) == 0) expectation += px * subset_prob[std::popcount(s)];
    }
  }
  return static_cast<double>(expectation);
}

NegativeCorrelationReport VerifyNegativeCorrelation(
    const JointDistribution& joint, std::span<const double> p_list) {
  const int n = joint.n();
  if (p_list.size() != static_cast<std::size_t>(n)) {
    throw ShapeError("need one p_i per variable");
  }
  for (double p : p_list) CheckUnit(p, "p_i");
  const std::size_t count = joint.outcomes();

  // superset[I] = sum over x containing I of mass(x) = E[prod_{i in I} X_i].
  std::vector<long double> superset(joint.masses().begin(),
                                    joint.masses().end());
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < count; ++mask) {
      if (!(mask & bit)) superset[mask] += superset[mask | bit];
    }
  }
  std::vector<long double> product(count);
  product[0] = 1.0L;
  NegativeCorrelationReport report;
  report.worst_slack = kInf;
  for (std::size_t mask = 0; mask < count; ++mask) {
    if (mask != 0) {
      const int low = std::countr_zero(mask);
      product[mask] = product[mask & (mask - 1)] * p_list[low];
    }
    const double slack = static_cast<double>(product[mask] - superset[mask]);
    if (slack < report.worst_slack) {
      report.worst_slack = slack;
      report.worst_index_set = static_cast<std::uint32_t>(mask);
    }
  }
  report.holds = report.worst_slack >= -kMassTolerance;
  return report;
}

double ExactJointTail(const JointDistribution& joint, std::int64_t k) {
  if (k <= 0) return 1.0;
  if (k > joint.n()) return 0.0;
  long double tail = 0.0L;
  for (std::uint32_t x = 0; x < joint.outcomes(); ++x) {
    if (std::popcount(x) >= k) tail += joint.mass(x);
  }
  return ClampProbability(static_cast<double>(tail));
}

double ExpectedMaxWithFloor(const BinomialSpec& spec, std::int64_t m) {
  spec.Validate();
  if (m < 1) throw DomainError("need m >= 1 copies, got " + std::to_string(m));
  const double floor_value = spec.p * static_cast<double>(spec.n);
  if (m == 1) return floor_value;
  const std::vector<double> tails = BinomialUpperTailTable(spec);
  const double copies = static_cast<double>(m - 1);
  // E[max(M, c)] = c + integral_c^inf Pr[M > x] dx for the integer-valued
  // maximum M of the m - 1 random copies.
  const auto first = static_cast<std::int64_t>(std::ceil(floor_value));
  long double excess = 0.0L;
  for (std::int64_t k = std::max<std::int64_t>(first, 1); k <= spec.n; ++k) {
    // Pr[M >= k] = 1 - (1 - Pr[X >= k])^(m - 1).
    const double at_least = -std::expm1(copies * std::log1p(-tails[k]));
    const double width =
        k == first ? static_cast<double>(first) - floor_value : 1.0;
    excess += static_cast<long double>(width) * at_least;
  }
  return floor_value + static_cast<double>(excess);
}

ValidWeightTailReport Lemma1TailCheck(const JointDistribution& joint,
                                      std::span<const double> weights,
                                      double s) {
  if (joint.n() > kMaxSingleEnumerationBits) {
    throw ResourceError("weight enumeration capped at n = " +
                        std::to_string(kMaxSingleEnumerationBits));
  }
  if (weights.size() != joint.outcomes()) {
    throw ShapeError("weight function needs one value per outcome");
  }
  if (!(s >= 1.0) || !std::isfinite(s)) {
    throw DomainError("s must be finite and >= 1");
  }
  long double total = 0.0L;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("weights must be finite and >= 0");
    }
    total += w;
  }
  if (total > 1.0L + kMassTolerance) {
    throw DomainError("weight function is not valid: total weight " +
                      std::to_string(static_cast<double>(total)) + " > 1");
  }
  long double probability = 0.0L;
  for (std::uint32_t x = 0; x < joint.outcomes(); ++x) {
    const double px = joint.mass(x);
    if (weights[x] >= s * px) probability += px;
  }
  ValidWeightTailReport report;
  report.probability = static_cast<double>(probability);
  report.limit = 1.0 / s;
  report.holds = report.probability <= report.limit + kMassTolerance;
  return report;
}

}  // namespace chernoff
