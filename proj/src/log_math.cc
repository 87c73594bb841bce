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

#include "chernoff/log_math.h"

#include <algorithm>
#include <cmath>

#include "chernoff/errors.h"

namespace chernoff {

double XLogX(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

double XLogY(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

double LogSumExp(std::span<const double> log_terms) {
  double max = -kInf;
  for (double v : log_terms) max = std::max(max, v);
  if (max == -kInf) return -kInf;
  if (max == kInf) return kInf;
  double sum = 0.0;
  for (double v : log_terms) sum += std::exp(v - max);
  return max + std::log(sum);
}

void LogSumAccumulator::Add(double log_term) {
  if (log_term == -kInf) return;
  if (log_term <= max_) {
    scaled_sum_ += std::exp(log_term - max_);
    return;
  }
  scaled_sum_ = (max_ == -kInf ? 0.0 : scaled_sum_ * std::exp(max_ - log_term)) +
                1.0;
  max_ = log_term;
}

double LogSumAccumulator::Result() const {
  if (max_ == -kInf) return -kInf;
  return max_ + std::log(scaled_sum_);
}

LogFactorialTable::LogFactorialTable(std::int64_t max_argument) {
  if (max_argument < 0) throw DomainError("log-factorial table size < 0");
  table_.resize(static_cast<std::size_t>(max_argument) + 1);
  table_[0] = 0.0L;
  for (std::int64_t k = 1; k <= max_argument; ++k) {
    table_[k] = table_[k - 1] + std::log(static_cast<long double>(k));
  }
}

long double LogFactorialTable::LogFactorial(std::int64_t k) const {
  if (k < 0 || k > max_argument()) {
    throw DomainError("log-factorial argument out of table range");
  }
  return table_[k];
}

long double LogFactorialTable::LogChoose(std::int64_t n, std::int64_t k) const {
  if (k < 0 || k > n) return -static_cast<long double>(kInf);
  return LogFactorial(n) - LogFactorial(k) - LogFactorial(n - k);
}

}  // namespace chernoff
