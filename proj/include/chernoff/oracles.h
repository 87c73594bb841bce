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

// Exact ground truth for the bound evaluators: distribution tails summed in
// the log domain, exhaustive enumeration over {0,1}^n, and the exact
// expectation of a floored maximum of binomials. Nothing here calls into
// bounds.h except for shared enums.

#ifndef CHERNOFF_ORACLES_H_
#define CHERNOFF_ORACLES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "chernoff/bounds.h"

namespace chernoff {

// Enumeration caps.
inline constexpr int kMaxJointBits = 20;
inline constexpr int kMaxSingleEnumerationBits = 12;
inline constexpr int kMaxDoubleEnumerationBits = 10;
inline constexpr std::int64_t kMaxClaimsPopulation = 60;

struct BinomialSpec {
  std::int64_t n = 1;
  double p = 0.5;

  void Validate() const;
};

// `draws` balls taken without replacement from `population` balls of which
// `red` are red.
struct UrnSpec {
  std::int64_t population = 1;
  std::int64_t red = 0;
  std::int64_t draws = 0;

  double p() const {
    return static_cast<double>(red) / static_cast<double>(population);
  }
  void Validate() const;
};

// Probability mass on {0,1}^n. Bit i of an outcome index is X_{i+1}.
class JointDistribution {
 public:
  JointDistribution(int n, std::vector<double> masses);

  // Independent bits with Pr[X_i = 1] = p_list[i].
  static JointDistribution Product(std::span<const double> p_list);
  // Indicators X_i = [the i-th of `draws` sequential draws is red].
  static JointDistribution UrnIndicators(const UrnSpec& urn);

  int n() const { return n_; }
  std::size_t outcomes() const { return masses_.size(); }
  std::span<const double> masses() const { return masses_; }
  double mass(std::uint32_t outcome) const { return masses_[outcome]; }

 private:
  int n_;
  std::vector<double> masses_;
};

// Sum of C(n,i) p^i (1-p)^{n-i} over i >= k (upper) or i <= k (lower).
// Requires 0 <= k <= n + 1.
double ExactBinomialTail(const BinomialSpec& spec, std::int64_t k,
                         Direction direction);

// Pr[B(n, p) >= k] for every k = 0..n+1, sharing one pass over the pmf.
std::vector<double> BinomialUpperTailTable(const BinomialSpec& spec);

// Pr[H >= k] for the urn count H, 0 <= k <= draws + 1.
double ExactHypergeometricTail(const UrnSpec& spec, std::int64_t k);

// Pr[sum_i X_i >= k] for independent X_i ~ Bernoulli(p_list[i]), by dynamic
// programming over the partial-sum distribution.
double ExactPoissonBinomialTail(std::span<const double> p_list,
                                std::int64_t k);

// Per-j margins (rhs - lhs) of the two urn moment inequalities:
//   claim 1: C(N,n)^{-1} sum_{i>=j} C(P,i) C(N-P,n-i) C(i,j) <= C(n,j) p^j
//   claim 2: C(N,n)^{-1} sum_i C(P,i) C(N-P,n-i) tau^i <= (1 + (tau-1) p)^n
// Coefficients are exact integers in extended precision for N <= 60.
struct HypergeometricClaimsReport {
  std::vector<double> claim1_lhs;
  std::vector<double> claim1_rhs;
  double tau = 1.0;
  double claim2_lhs = 0.0;
  double claim2_rhs = 0.0;
  // min over all margins, each divided by max(1, rhs).
  double worst_relative_margin = 0.0;
  bool holds = true;
};

HypergeometricClaimsReport VerifyHypergeometricClaims(const UrnSpec& spec,
                                                      double tau);

// E[prod_{i in I} X_i] for iid X_i ~ Bernoulli(p) and a random index set I
// that contains each index independently with probability lambda, computed
// by enumerating every (x, S) pair. n <= 10.
double IkProductExpectation(int n, double p, double lambda);

struct NegativeCorrelationReport {
  bool holds = true;
  // Bitmask of the index set with the smallest slack prod p_i - E[prod X_i].
  std::uint32_t worst_index_set = 0;
  double worst_slack = 0.0;
};

// Checks E[prod_{i in I} X_i] <= prod_{i in I} p_i for all 2^n index sets.
NegativeCorrelationReport VerifyNegativeCorrelation(
    const JointDistribution& joint, std::span<const double> p_list);

// Pr[number of ones >= k].
double ExactJointTail(const JointDistribution& joint, std::int64_t k);

// E[max{X^(1), ..., X^(m-1), pn}] for iid X^(i) ~ B(n, p).
double ExpectedMaxWithFloor(const BinomialSpec& spec, std::int64_t m);

struct ValidWeightTailReport {
  double probability = 0.0;
  double limit = 1.0;  // 1 / s
  bool holds = true;
};

// Pr_{x ~ joint}[w(x) >= s p_x], enumerated, against 1/s. The weight
// function must be nonnegative with total at most 1 (+1e-12) and s >= 1.
ValidWeightTailReport Lemma1TailCheck(const JointDistribution& joint,
                                      std::span<const double> weights,
                                      double s);

}  // namespace chernoff

#endif  // CHERNOFF_ORACLES_H_
