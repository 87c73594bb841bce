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

#include "chernoff/mechanisms.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "chernoff/errors.h"
#include "chernoff/log_math.h"
#include "chernoff/oracles.h"
#include "chernoff/random.h"

namespace chernoff {
namespace {

constexpr double kAuditTolerance = 1e-12;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseEntry(std::string_view token, std::size_t line) {
  token = Trim(token);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      end != token.data() + token.size()) {
    throw DomainError("line " + std::to_string(line) +
                      ": malformed matrix entry '" + std::string(token) + "'");
  }
  return value;
}

// c * ln(x / y) with 0 * anything = 0 and ln(0 / 0) treated as 0.
double ScaledLogRatio(std::int64_t c, double x, double y) {
  if (c == 0 || x == y) return 0.0;
  if (x == 0.0) return -kInf;
  if (y == 0.0) return kInf;
  return static_cast<double>(c) * (std::log(x) - std::log(y));
}

}  // namespace

ScoreMatrix::ScoreMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw ShapeError("score matrix needs at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("score matrix entry count does not match its shape");
  }
  for (double a : entries_) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw DomainError("score matrix entries must lie in [0, 1], got " +
                        std::to_string(a));
    }
  }
}

ScoreMatrix ScoreMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ShapeError("score matrix has no rows");
  const std::size_t cols = rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw ShapeError("ragged score matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ScoreMatrix(rows.size(), cols, std::move(entries));
}

std::vector<double> ScoreMatrix::RowSums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) sums[i] += at(i, j);
  }
  return sums;
}

ScoreMatrix ScoreMatrix::WithColumnReplaced(
    std::size_t j, std::span<const double> column) const {
  if (j >= cols_) {
    throw ShapeError("column index " + std::to_string(j) + " out of range");
  }
  if (column.size() != rows_) {
    throw ShapeError("replacement column needs one entry per row");
  }
  std::vector<double> entries = entries_;
  for (std::size_t i = 0; i < rows_; ++i) entries[i * cols_ + j] = column[i];
  return ScoreMatrix(rows_, cols_, std::move(entries));
}

ScoreMatrix ReadScoreMatrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view content = Trim(line);
    if (content.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = content.find(',', start);
      const auto token = content.substr(
          start, comma == std::string_view::npos ? content.npos : comma - start);
      row.push_back(ParseEntry(token, line_number));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ShapeError("line " + std::to_string(line_number) + ": expected " +
                       std::to_string(rows.front().size()) +
                       " entries, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return ScoreMatrix::FromRows(rows);
}

SelectorDistribution MakeSelectorDistribution(const ScoreMatrix& scores,
                                              double gamma) {
  if (gamma == 1.0) {
    throw DomainError("gamma = 1 (e.g. m = 1 in gamma = 1 + sqrt(ln m / n)) "
                      "leaves log_gamma undefined; need gamma > 1");
  }
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw DomainError("stable selector needs finite gamma > 1");
  }
  const double log_gamma = std::log(gamma);
  std::vector<double> logits = scores.RowSums();
  for (double& b : logits) b *= log_gamma;

  SelectorDistribution dist;
  dist.gamma = gamma;
  dist.log_normalizer = LogSumExp(logits);
  dist.log_probabilities.reserve(logits.size());
  dist.probabilities.reserve(logits.size());
  for (double v : logits) {
    const double lp = v - dist.log_normalizer;
    dist.log_probabilities.push_back(lp);
    dist.probabilities.push_back(std::exp(lp));
  }
  return dist;
}

std::vector<std::size_t> SampleSelector(const SelectorDistribution& dist,
                                        std::uint64_t seed,
                                        std::size_t count) {
  const std::size_t m = dist.probabilities.size();
  if (m == 0) throw ShapeError("empty selector distribution");
  std::vector<double> cumulative(m);
  double running = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    running += dist.probabilities[i];
    cumulative[i] = running;
  }
  cumulative.back() = 1.0;

  std::vector<std::size_t> draws(count);
  for (std::size_t j = 0; j < count; ++j) {
    StreamRng rng(seed, j);
    const double u = rng.Uniform();
    // First index whose cumulative mass exceeds u; equal cumulative values
    // (zero-probability rows) resolve to the lower index.
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    draws[j] = std::min<std::size_t>(it - cumulative.begin(), m - 1);
  }
  return draws;
}

StabilityReport StabilityAudit(const ScoreMatrix& scores,
                               std::size_t column_index,
                               std::span<const double> replacement,
                               double gamma) {
  const ScoreMatrix neighbour =
      scores.WithColumnReplaced(column_index, replacement);
  const SelectorDistribution original = MakeSelectorDistribution(scores, gamma);
  const SelectorDistribution changed =
      MakeSelectorDistribution(neighbour, gamma);

  const double low = 1.0 / (gamma * gamma) - kAuditTolerance;
  const double high = gamma * gamma + kAuditTolerance;
  StabilityReport report;
  report.ratios.reserve(scores.rows());
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    const double ratio = std::exp(original.log_probabilities[i] -
                                  changed.log_probabilities[i]);
    report.ratios.push_back(ratio);
    if (!(ratio >= low && ratio <= high)) report.ratios_within = false;
  }
  report.log_normalizer_shift = original.log_normalizer - changed.log_normalizer;
  report.normalizer_within = std::abs(report.log_normalizer_shift) <=
                             std::log(gamma) + kAuditTolerance;
  return report;
}

AccuracyReport AccuracyGap(const ScoreMatrix& scores, double gamma) {
  const SelectorDistribution dist = MakeSelectorDistribution(scores, gamma);
  const std::vector<double> sums = scores.RowSums();
  AccuracyReport report;
  report.max_score = *std::max_element(sums.begin(), sums.end());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    report.expected_score += dist.probabilities[i] * sums[i];
  }
  report.gap = report.max_score - report.expected_score;
  report.limit =
      std::log(static_cast<double>(scores.rows())) / std::log(gamma);
  report.within = report.gap >= -kAuditTolerance &&
                  report.gap <= report.limit + kAuditTolerance;
  return report;
}

void EncodingScheme::Validate() const {
  if (n < 1) throw DomainError("encoding needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("encoding p outside [0, 1]");
  if (!(t >= 0.0) || p + t > 1.0 + 1e-12) {
    throw DomainError("encoding needs t >= 0 and p + t <= 1");
  }
}

double EncodingLogRatio(const EncodingScheme& scheme, std::int64_t k) {
  scheme.Validate();
  if (k < 0 || k > scheme.n) {
    throw DomainError("ones count k must lie in [0, n], got " +
                      std::to_string(k));
  }
  const double shifted = std::min(1.0, scheme.p + scheme.t);
  const double log_ratio =
      ScaledLogRatio(k, shifted, scheme.p) +
      ScaledLogRatio(scheme.n - k, 1.0 - shifted, 1.0 - scheme.p);
  if (std::isnan(log_ratio)) {
    throw DomainError("likelihood ratio is 0/0 for an impossible string");
  }
  return log_ratio;
}

double EncodingRatio(const EncodingScheme& scheme, std::int64_t k) {
  return std::exp(EncodingLogRatio(scheme, k));
}

std::vector<double> EncodingWeights(const EncodingScheme& scheme) {
  scheme.Validate();
  if (scheme.n > kMaxSingleEnumerationBits) {
    throw ResourceError("weight enumeration capped at n = " +
                        std::to_string(kMaxSingleEnumerationBits));
  }
  const int n = static_cast<int>(scheme.n);
  const double shifted = std::min(1.0, scheme.p + scheme.t);
  std::vector<double> by_ones(n + 1);
  for (int k = 0; k <= n; ++k) {
    by_ones[k] = std::pow(shifted, k) * std::pow(1.0 - shifted, n - k);
  }
  std::vector<double> weights(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < weights.size(); ++x) {
    weights[x] = by_ones[std::popcount(x)];
  }
  return weights;
}

}  // namespace chernoff
