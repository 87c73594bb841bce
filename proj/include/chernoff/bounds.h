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

// Closed-form tail bounds for sums of 0/1 random variables.
//
// Every evaluator works in the log domain and derives the linear value by
// exponentiation, so bounds far below the double range stay representable
// through `log_value`. Bounds that exceed 1 are reported as they are, with
// `vacuous` set.

#ifndef CHERNOFF_BOUNDS_H_
#define CHERNOFF_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chernoff {

enum class Direction { kUpper, kLower, kTwoSided };

const char* DirectionName(Direction direction);

// Deviation of X = X_1 + ... + X_n from (p +/- t) n. For Hoeffding's
// extension and negatively correlated variables, p is the mean parameter.
struct TailQuery {
  std::int64_t n = 1;
  double p = 0.5;
  double t = 0.0;
  Direction direction = Direction::kUpper;

  double mu() const { return p * static_cast<double>(n); }
};

// Relative deviation delta around mu = pn. `n` is optional; when given,
// SimplifiedBound notes the degenerate case (1 + delta) mu > n.
struct MultiplicativeQuery {
  double mu = 0.0;
  double delta = 0.0;
  Direction direction = Direction::kUpper;
  std::optional<std::int64_t> n;
};

struct BoundResult {
  std::string name;
  double log_value = 0.0;
  double value = 1.0;
  // value >= 1, equivalently log_value >= 0.
  bool vacuous = true;
  // Non-empty when the formula was evaluated outside the regime where the
  // bound is informative about the event, e.g. an impossible threshold.
  std::string note;
  std::vector<std::pair<std::string, double>> inputs;
};

BoundResult MakeBoundResult(std::string name, double log_value,
                            std::vector<std::pair<std::string, double>> inputs);

// exp(-n D(p + t || p)) for the upper tail; the lower tail is evaluated as
// the upper tail of n - X, i.e. with p replaced by 1 - p. Admissible t is
// [0, 1 - p] (upper) or [0, p] (lower). A divergence of +inf yields
// log_value = -inf and value 0.
BoundResult KlTailBound(const TailQuery& query);

// Urn with `population` balls, `red` of them red, `draws` drawn without
// replacement: KlTailBound with p = red / population.
BoundResult HypergeometricBound(std::int64_t population, std::int64_t red,
                                std::int64_t draws, double t);

enum class LambdaMethod {
  // ((p e^l + 1 - p) / e^{l (p + t)})^n for l > 0. Chvatal's tau = e^l gives
  // the same expression.
  kMoment,
  // ((l p + 1 - l) / (1 - l)^{1 - p - t})^n for l in (0, 1].
  kIk,
};

const char* LambdaMethodName(LambdaMethod method);

// Upper-tail bound for a fixed free parameter. Throws DomainError when
// lambda is outside the method's range and UnsupportedError for lower tails.
BoundResult ParametricBound(const TailQuery& query, double lambda,
                            LambdaMethod method);

// Minimizer of ParametricBound over lambda:
//   moment: ln[(1 - p)(p + t) / (p (1 - p - t))], needs 0 < t < 1 - p
//   ik:     t / ((1 - p)(p + t)),                  needs 0 < t <= 1 - p
// Both need 0 < p < 1.
double OptimalLambda(double p, double t, LambdaMethod method);

// (e^d / (1 + d)^{1 + d})^mu (upper) or (e^{-d} / (1 - d)^{1 - d})^mu
// (lower, d in [0, 1], with 0^0 = 1 at d = 1).
BoundResult MultiplicativeBound(const MultiplicativeQuery& query);

// lower:     e^{-d^2 mu / 2},               d in (0, 1)
// upper:     e^{-min(d^2, d) mu / 4},       d >= 0
// two-sided: 2 e^{-min(d^2, d) mu / 4},     d >= 0
BoundResult SimplifiedBound(const MultiplicativeQuery& query);

// Pr[X >= t_abs] <= 2^{-t_abs} whenever t_abs >= 2 e mu.
BoundResult AbsoluteThresholdBound(double mu, double t_abs);

// The weaker bound e^{1 - t^2 n / 64} obtained through stable selection.
BoundResult SteinkeUllmanBound(std::int64_t n, double t);

// (1/n) sum_i p_i. Throws DomainError on an empty list or entries outside
// [0, 1].
double MeanParameter(std::span<const double> p_list);

// Smallest integer k with k >= (p + t) n, i.e. the event X >= (p + t) n as an
// integer threshold. A relative slack of 1e-12 absorbs representation error
// in products that are integers in exact arithmetic.
std::int64_t UpperThreshold(std::int64_t n, double p, double t);

// Largest integer k with k <= (p - t) n.
std::int64_t LowerThreshold(std::int64_t n, double p, double t);

}  // namespace chernoff

#endif  // CHERNOFF_BOUNDS_H_
