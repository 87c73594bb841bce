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

#include "chernoff/divergence.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "chernoff/errors.h"
#include "chernoff/log_math.h"

namespace chernoff {
namespace {

void CheckProbability(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " +
                      std::to_string(x));
  }
}

// x ln(x / y) = x ln x - x ln y, with x ln(x / 0) = +inf for x > 0.
double RelativeEntropyTerm(double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return kInf;
  return XLogX(x) - XLogY(x, y);
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("distribution needs m >= 1 weights");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw DomainError("distribution weights must be finite and >= 0");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kDistributionSumTolerance) {
    throw DomainError("distribution weights sum to " + std::to_string(total) +
                      ", not 1");
  }
}

double KlBinary(double a, double p) {
  CheckProbability(a, "first KL argument");
  CheckProbability(p, "reference KL argument");
  if (a == p) return 0.0;
  const double d =
      RelativeEntropyTerm(a, p) + RelativeEntropyTerm(1.0 - a, 1.0 - p);
  // Rounding can leave a tiny negative where the exact value is ~0.
  return std::max(d, 0.0);
}

double KlGeneral(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (p.size() != q.size()) {
    throw ShapeError("KL divergence needs equal lengths, got " +
                     std::to_string(p.size()) + " and " +
                     std::to_string(q.size()));
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    d += RelativeEntropyTerm(p[i], q[i]);
  }
  return std::max(d, 0.0);
}

}  // namespace chernoff
