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

// The stable selector Pr[i] = gamma^{b_i} / sum_k gamma^{b_k} over the row
// sums b of a score matrix, and the likelihood ratio w(x) / p_x of the
// encoding weights.

#ifndef CHERNOFF_MECHANISMS_H_
#define CHERNOFF_MECHANISMS_H_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace chernoff {

// m x n matrix with entries in [0, 1], row-major.
class ScoreMatrix {
 public:
  ScoreMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static ScoreMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::vector<double> RowSums() const;

  // The neighbour matrix with column j replaced by `column`.
  ScoreMatrix WithColumnReplaced(std::size_t j,
                                 std::span<const double> column) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

// One row per line, comma-separated decimals in [0, 1]. Blank lines are
// skipped. Throws ShapeError on ragged or empty input, DomainError on
// malformed or out-of-range entries.
ScoreMatrix ReadScoreMatrix(std::istream& in);

struct SelectorDistribution {
  double gamma = 2.0;
  std::vector<double> probabilities;
  std::vector<double> log_probabilities;
  // ln C_gamma(A) = ln sum_i gamma^{b_i}.
  double log_normalizer = 0.0;
};

// Throws DomainError for gamma <= 1; gamma = 1 gets its own message because
// it is what gamma = 1 + sqrt(ln m / n) gives at m = 1.
SelectorDistribution MakeSelectorDistribution(const ScoreMatrix& scores,
                                              double gamma);

// Inverse-CDF draws; draw j uses StreamRng(seed, j).
std::vector<std::size_t> SampleSelector(const SelectorDistribution& dist,
                                        std::uint64_t seed,
                                        std::size_t count);

struct StabilityReport {
  // Pr_A[i] / Pr_{A'}[i] per row.
  std::vector<double> ratios;
  // ln C(A) - ln C(A'), which must lie in [-ln gamma, ln gamma].
  double log_normalizer_shift = 0.0;
  bool ratios_within = true;
  bool normalizer_within = true;

  bool passed() const { return ratios_within && normalizer_within; }
};

// Compares the selector on A with the selector on A with column
// `column_index` replaced. Ratios must lie in [gamma^-2, gamma^2] (+-1e-12).
StabilityReport StabilityAudit(const ScoreMatrix& scores,
                               std::size_t column_index,
                               std::span<const double> replacement,
                               double gamma);

struct AccuracyReport {
  double expected_score = 0.0;
  double max_score = 0.0;
  double gap = 0.0;
  // ln m / ln gamma.
  double limit = 0.0;
  bool within = true;
};

AccuracyReport AccuracyGap(const ScoreMatrix& scores, double gamma);

// Product weights w(x) = (p+t)^{k_x} (1-p-t)^{n-k_x} against the true law
// p_x = p^{k_x} (1-p)^{n-k_x}.
struct EncodingScheme {
  std::int64_t n = 1;
  double p = 0.5;
  double t = 0.0;

  void Validate() const;
};

// ln(w(x) / p_x) for any x with k ones. May be +-inf at the boundaries.
double EncodingLogRatio(const EncodingScheme& scheme, std::int64_t k);
double EncodingRatio(const EncodingScheme& scheme, std::int64_t k);

// w(x) for every x in {0,1}^n, n <= 12, indexed like JointDistribution.
std::vector<double> EncodingWeights(const EncodingScheme& scheme);

}  // namespace chernoff

#endif  // CHERNOFF_MECHANISMS_H_
