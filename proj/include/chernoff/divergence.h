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

#ifndef CHERNOFF_DIVERGENCE_H_
#define CHERNOFF_DIVERGENCE_H_

#include <span>
#include <vector>

namespace chernoff {

// Absolute tolerance on the total mass of a user-supplied distribution.
inline constexpr double kDistributionSumTolerance = 1e-12;

// A probability vector on m >= 1 points. Construction validates
// nonnegativity and unit mass.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

// Kullback-Leibler divergence D(a || p) between the Bernoulli laws with
// success probabilities a and p, in nats.
//
// Conventions: 0 * ln(0 / q) = 0 and x * ln(x / 0) = +inf for x > 0, so the
// result is +inf for (a > 0, p = 0) and (a < 1, p = 1). Throws DomainError
// if either argument is outside [0, 1] or NaN.
double KlBinary(double a, double p);

// D(P || Q) = sum_i p_i ln(p_i / q_i) with the same zero conventions as
// KlBinary. Throws ShapeError on a length mismatch.
double KlGeneral(const DiscreteDistribution& p, const DiscreteDistribution& q);

}  // namespace chernoff

#endif  // CHERNOFF_DIVERGENCE_H_
