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

#include "chernoff/montecarlo.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "chernoff/errors.h"
#include "chernoff/random.h"
#include "reference.h"

namespace chernoff {
namespace {

TEST(StreamRngTest, DeterministicPerSeedAndStream) {
  StreamRng a(1, 2), b(1, 2), c(1, 3), d(2, 2);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 100u);
}

TEST(StreamRngTest, UniformAndBelowRanges) {
  StreamRng rng(9, 9);
  std::vector<int> buckets(7, 0);
  constexpr int kDraws = 70'000;
  double sum = 0;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    const auto b = rng.Below(7);
    ASSERT_LT(b, 7u);
    ++buckets[b];
  }
  EXPECT_NEAR(sum / kDraws, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / kDraws));
  // Pearson chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile.
  double chi2 = 0;
  for (int count : buckets) {
    chi2 += (count - 10'000.0) * (count - 10'000.0) / 10'000.0;
  }
  EXPECT_LT(chi2, 22.46);
  EXPECT_EQ(rng.Below(1), 0u);
}

TEST(SimulationSpecTest, Validation) {
  EXPECT_THROW((SimulationSpec{IidModel{5, 0.5}, 0, 1}.Validate()), DomainError);
  EXPECT_THROW((SimulationSpec{IidModel{0, 0.5}, 10, 1}.Validate()), DomainError);
  EXPECT_THROW((SimulationSpec{IidModel{5, 1.5}, 10, 1}.Validate()), DomainError);
  EXPECT_THROW((SimulationSpec{HeterogeneousModel{{}}, 10, 1}.Validate()),
               DomainError);
  EXPECT_THROW((SimulationSpec{UrnSpec{4, 5, 2}, 10, 1}.Validate()), DomainError);
  EXPECT_THROW(SimulateSum(SimulationSpec{IidModel{1000, 0.5}, 10'000'000, 1}),
               ResourceError);
}

TEST(SimulateSumTest, DegenerateModels) {
  for (auto s : SimulateSum({IidModel{5, 1.0}, 1000, 3})) EXPECT_EQ(s, 5);
  for (auto s : SimulateSum({IidModel{5, 0.0}, 1000, 3})) EXPECT_EQ(s, 0);
  for (auto s : SimulateSum({UrnSpec{4, 2, 4}, 1000, 3})) EXPECT_EQ(s, 2);
  for (auto s : SimulateSum({HeterogeneousModel{{1.0, 0.0, 1.0}}, 500, 3})) {
    EXPECT_EQ(s, 2);
  }
}

TEST(SimulateSumTest, IdenticalAcrossThreadCounts) {
  for (const SampleModel& model :
       {SampleModel(IidModel{30, 0.4}),
        SampleModel(HeterogeneousModel{{0.1, 0.5, 0.9, 0.3}}),
        SampleModel(UrnSpec{25, 9, 12})}) {
    const SimulationSpec spec{model, 12'345, 2024};
    const auto one = SimulateSum(spec, 1);
    EXPECT_EQ(one.size(), 12'345u);
    for (unsigned threads : {2u, 3u, 7u, 64u}) {
      EXPECT_EQ(SimulateSum(spec, threads), one) << threads;
    }
    EXPECT_EQ(SimulateHistogram(spec, 1), SimulateHistogram(spec, 4));
    EXPECT_NE(SimulateSum({model, 12'345, 2025}, 1), one);
  }
}

TEST(SimulateSumTest, HistogramMatchesSums) {
  const SimulationSpec spec{IidModel{8, 0.3}, 5000, 17};
  const auto sums = SimulateSum(spec, 2);
  const auto hist = SimulateHistogram(spec, 3);
  ASSERT_EQ(hist.size(), 9u);
  std::vector<std::uint64_t> counted(9, 0);
  for (auto s : sums) ++counted[s];
  EXPECT_EQ(hist, counted);
}

TEST(EmpiricalTailTest, WorkedValues) {
  const EmpiricalTail zero = EmpiricalTailOf({IidModel{10, 0.5}, 1000, 7}, 0);
  EXPECT_EQ(zero.estimate, 1.0);
  EXPECT_EQ(zero.standard_error, 0.0);

  const EmpiricalTail iid = EmpiricalTailOf({IidModel{10, 0.5}, 100'000, 7}, 8);
  EXPECT_LE(std::abs(iid.estimate - 0.0546875), 4.0 * iid.standard_error);
  EXPECT_EQ(iid.trials, 100'000u);
  EXPECT_EQ(iid.seed, 7u);

  const EmpiricalTail urn = EmpiricalTailOf({UrnSpec{10, 5, 4}, 100'000, 7}, 3);
  const double exact =
      static_cast<double>(reference::HypergeometricTail(10, 5, 4, 3));
  EXPECT_LE(std::abs(urn.estimate - exact), 4.0 * urn.standard_error);
  EXPECT_NEAR(exact, 0.2619048, 1e-7);
}

TEST(EmpiricalTailTest, HeterogeneousAgainstBruteForce) {
  const std::vector<double> p = {0.05, 0.5, 0.6, 0.95, 0.2};
  const SimulationSpec spec{HeterogeneousModel{p}, 100'000, 5};
  for (int k = 1; k <= 5; ++k) {
    const EmpiricalTail tail = EmpiricalTailOf(spec, k);
    const double exact =
        static_cast<double>(reference::PoissonBinomialTailBrute(p, k));
    EXPECT_LE(std::abs(tail.estimate - exact), 4.0 * tail.standard_error + 1e-12)
        << k;
    EXPECT_NEAR(ExactModelTail(spec.model, k), exact, 1e-14);
  }
}

TEST(UrnPositionCountsTest, EveryPositionIsEquallyLikelyRed) {
  const UrnSpec urn{12, 5, 7};
  constexpr std::uint64_t kTrials = 60'000;
  const auto counts = UrnPositionCounts(urn, kTrials, 3);
  ASSERT_EQ(counts.size(), 7u);
  const double p = 5.0 / 12.0;
  const double se = std::sqrt(p * (1 - p) / kTrials);
  for (auto c : counts) {
    EXPECT_LE(std::abs(static_cast<double>(c) / kTrials - p), 4.0 * se);
  }
  EXPECT_EQ(counts, UrnPositionCounts(urn, kTrials, 3, 5));
}

TEST(BoundScorecardTest, WorkedValues) {
  const SimulationSpec spec{IidModel{100, 0.5}, 20'000, 1};
  const auto rows = BoundScorecard(spec, std::vector<double>{0.0, 0.1});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].k, 50);
  EXPECT_NEAR(rows[0].exact,
              static_cast<double>(reference::BinomialUpperTail(100, 0.5, 50)),
              1e-14);
  EXPECT_GE(rows[0].kl, 1.0);
  EXPECT_GE(rows[0].multiplicative, 1.0);
  EXPECT_GE(rows[0].simplified, 1.0);
  EXPECT_GE(rows[0].steinke_ullman, 1.0);

  EXPECT_EQ(rows[1].k, 60);
  EXPECT_NEAR(rows[1].exact,
              static_cast<double>(reference::BinomialUpperTail(100, 0.5, 60)),
              1e-15);
  EXPECT_NEAR(rows[1].exact, 0.0284, 1e-4);
  EXPECT_NEAR(rows[1].kl, 0.13351, 5e-6);
  EXPECT_NEAR(rows[1].KlTightness(), rows[1].kl / rows[1].exact, 1e-12);
}

TEST(BoundScorecardTest, HeterogeneousUsesMeanParameter) {
  const SimulationSpec spec{HeterogeneousModel{{0.2, 0.4, 0.6, 0.8}}, 10'000, 1};
  const auto rows = BoundScorecard(spec, std::vector<double>{0.25});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].k, 3);
  EXPECT_NEAR(rows[0].kl,
              static_cast<double>(std::exp(-4 * reference::Kl(0.75L, 0.5L))),
              1e-15);
}

TEST(BoundScorecardTest, DeterministicAndOrdered) {
  const SimulationSpec spec{UrnSpec{40, 15, 20}, 10'000, 8};
  const std::vector<double> ts = {0.3, 0.0, 0.1};
  const auto a = BoundScorecard(spec, ts, 1);
  const auto b = BoundScorecard(spec, ts, 4);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].t, ts[i]);
    EXPECT_EQ(a[i].empirical, b[i].empirical);
    EXPECT_LE(a[i].exact, a[i].kl + 1e-12);
  }
  EXPECT_THROW(BoundScorecard(spec, std::vector<double>{0.7}), DomainError);
  EXPECT_THROW(BoundScorecard(spec, std::vector<double>{}), DomainError);
}

}  // namespace
}  // namespace chernoff
