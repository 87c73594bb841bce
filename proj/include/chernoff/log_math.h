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

// Log-domain helpers shared by the divergence, bound and oracle code.

#ifndef CHERNOFF_LOG_MATH_H_
#define CHERNOFF_LOG_MATH_H_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace chernoff {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// x * ln(x) with the continuous extension 0 * ln(0) = 0.
double XLogX(double x);

// x * ln(y) with 0 * ln(y) = 0 for every y, including y = 0.
double XLogY(double x, double y);

// ln(sum_i exp(v_i)), shifting by the largest term before exponentiating.
// Returns -inf for an empty span or when every term is -inf.
double LogSumExp(std::span<const double> log_terms);

// Streaming variant of LogSumExp. Rescales the running sum whenever a larger
// term arrives, so it needs a single pass.
class LogSumAccumulator {
 public:
  void Add(double log_term);
  double Result() const;

 private:
  double max_ = -kInf;
  double scaled_sum_ = 0.0;
};

// Cumulative table of ln(k!) for k = 0..size-1, summed in extended precision.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(std::int64_t max_argument);

  std::int64_t max_argument() const {
    return static_cast<std::int64_t>(table_.size()) - 1;
  }
  long double LogFactorial(std::int64_t k) const;
  // ln C(n, k); -inf when k < 0 or k > n.
  long double LogChoose(std::int64_t n, std::int64_t k) const;

 private:
  std::vector<long double> table_;
};

}  // namespace chernoff

#endif  // CHERNOFF_LOG_MATH_H_
