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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "chernoff/errors.h"
#include "chernoff/random.h"
#include "reference.h"

namespace chernoff {
namespace {

double Ratio(reference::u128 num, reference::u128 den) {
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

TEST(ExactBinomialTailTest, WorkedValues) {
  reference::u128 at_least_5 = 0;
  for (int i = 5; i <= 10; ++i) at_least_5 += reference::Choose(10, i);
  EXPECT_EQ(at_least_5, 638u);
  EXPECT_NEAR(ExactBinomialTail({10, 0.5}, 5, Direction::kUpper), 0.623046875,
              1e-15);
  EXPECT_EQ(ExactBinomialTail({10, 0.5}, 0, Direction::kUpper), 1.0);
  EXPECT_NEAR(ExactBinomialTail({10, 0.5}, 8, Direction::kUpper), 0.0546875,
              1e-16);
  EXPECT_EQ(ExactBinomialTail({10, 0.5}, 11, Direction::kUpper), 0.0);
  EXPECT_EQ(ExactBinomialTail({10, 0.5}, 10, Direction::kLower), 1.0);
}

TEST(ExactBinomialTailTest, DegenerateP) {
  EXPECT_EQ(ExactBinomialTail({10, 0.0}, 0, Direction::kUpper), 1.0);
  EXPECT_EQ(ExactBinomialTail({10, 0.0}, 1, Direction::kUpper), 0.0);
  EXPECT_EQ(ExactBinomialTail({10, 1.0}, 10, Direction::kUpper), 1.0);
  EXPECT_EQ(ExactBinomialTail({10, 1.0}, 9, Direction::kLower), 0.0);
}

TEST(ExactBinomialTailTest, Errors) {
  EXPECT_THROW(ExactBinomialTail({10, 0.5}, -1, Direction::kUpper), DomainError);
  EXPECT_THROW(ExactBinomialTail({10, 0.5}, 12, Direction::kUpper), DomainError);
  EXPECT_THROW(ExactBinomialTail({0, 0.5}, 0, Direction::kUpper), DomainError);
  EXPECT_THROW(ExactBinomialTail({10, 1.5}, 0, Direction::kUpper), DomainError);
}

TEST(ExactBinomialTailTest, MatchesTermwiseReference) {
  for (int n : {1, 3, 10, 64, 300, 1000}) {
    for (double p : {0.001, 0.1, 0.5, 0.77, 0.999}) {
      for (int k = 0; k <= n; k += std::max(1, n / 25)) {
        const double want =
            static_cast<double>(reference::BinomialUpperTail(n, p, k));
        EXPECT_NEAR(ExactBinomialTail({n, p}, k, Direction::kUpper), want,
                    1e-12 * want + 1e-300)
            << n << " " << p << " " << k;
      }
    }
  }
}

TEST(ExactBinomialTailTest, DeepTailDoesNotUnderflowToWrongValue) {
  // Pr[B(2000, 0.1) >= 1500] is about e^{-2100}: representable only as 0.
  EXPECT_EQ(ExactBinomialTail({2000, 0.1}, 1500, Direction::kUpper), 0.0);
  const double tail = ExactBinomialTail({2000, 0.1}, 400, Direction::kUpper);
  EXPECT_GT(tail, 0.0);
  EXPECT_LT(tail, 1e-30);
}

TEST(BinomialUpperTailTableTest, AgreesWithSingleQueries) {
  const BinomialSpec spec{37, 0.42};
  const auto table = BinomialUpperTailTable(spec);
  ASSERT_EQ(table.size(), 39u);
  for (int k = 0; k <= 38; ++k) {
    EXPECT_NEAR(table[k], ExactBinomialTail(spec, k, Direction::kUpper),
                1e-15);
  }
}

TEST(ExactHypergeometricTailTest, WorkedValues) {
  EXPECT_EQ(reference::Choose(5, 3) * 5 + reference::Choose(5, 4), 55u);
  EXPECT_EQ(reference::Choose(10, 4), 210u);
  EXPECT_NEAR(ExactHypergeometricTail({10, 5, 4}, 3), 55.0 / 210.0, 1e-15);
  EXPECT_EQ(ExactHypergeometricTail({10, 5, 4}, 0), 1.0);
  EXPECT_EQ(ExactHypergeometricTail({10, 5, 4}, 5), 0.0);
}

TEST(ExactHypergeometricTailTest, MatchesExactIntegers) {
  for (int big_n : {1, 2, 9, 40, 100}) {
    for (int red = 0; red <= big_n; red += std::max(1, big_n / 7)) {
      for (int draws = 0; draws <= big_n; draws += std::max(1, big_n / 6)) {
        for (int k = 0; k <= draws + 1; ++k) {
          const double want = static_cast<double>(
              reference::HypergeometricTail(big_n, red, draws, k));
          EXPECT_NEAR(ExactHypergeometricTail({big_n, red, draws}, k), want,
                      1e-13 * want + 1e-300);
        }
      }
    }
  }
}

TEST(ExactHypergeometricTailTest, Errors) {
  EXPECT_THROW(ExactHypergeometricTail({10, 11, 4}, 0), DomainError);
  EXPECT_THROW(ExactHypergeometricTail({10, 5, 11}, 0), DomainError);
  EXPECT_THROW(ExactHypergeometricTail({0, 0, 0}, 0), DomainError);
}

TEST(ExactPoissonBinomialTailTest, MatchesBruteForce) {
  StreamRng rng(31, 0);
  for (int c = 0; c < 50; ++c) {
    std::vector<double> p(1 + rng.Below(12));
    for (double& x : p) x = rng.Uniform();
    for (int k = 0; k <= static_cast<int>(p.size()) + 1; ++k) {
      EXPECT_NEAR(ExactPoissonBinomialTail(p, k),
                  static_cast<double>(reference::PoissonBinomialTailBrute(p, k)),
                  1e-14);
    }
  }
}

TEST(HypergeometricMomentTest, WorkedValues) {
  const UrnSpec urn{10, 5, 4};
  const auto report = VerifyHypergeometricClaims(urn, 2.0);
  ASSERT_EQ(report.claim1_lhs.size(), 5u);
  EXPECT_NEAR(report.claim1_lhs[0], 1.0, 1e-15);
  EXPECT_NEAR(report.claim1_rhs[0], 1.0, 1e-15);
  EXPECT_NEAR(report.claim1_lhs[4], 5.0 / 210.0, 1e-16);
  EXPECT_NEAR(report.claim1_rhs[4], 0.0625, 1e-16);

  // tau-moment left side by direct summation of the tau-weighted pmf.
  long double lhs = 0;
  for (int i = 0; i <= 4; ++i) {
    lhs += static_cast<long double>(reference::Choose(5, i) *
                                    reference::Choose(5, 4 - i)) *
           std::pow(2.0L, i);
  }
  lhs /= 210;
  EXPECT_NEAR(report.claim2_lhs, static_cast<double>(lhs), 1e-15);
  EXPECT_NEAR(report.claim2_rhs, 5.0625, 1e-15);
  EXPECT_LE(report.claim2_lhs, report.claim2_rhs);
  EXPECT_TRUE(report.holds);
}

TEST(HypergeometricMomentTest, Errors) {
  EXPECT_THROW(VerifyHypergeometricClaims({10, 5, 4}, 0.5), DomainError);
  EXPECT_THROW(VerifyHypergeometricClaims({61, 5, 4}, 1.0), ResourceError);
}

TEST(IkProductExpectationTest, WorkedValues) {
  EXPECT_NEAR(IkProductExpectation(3, 0.5, 0.5), 0.421875, 1e-16);
  EXPECT_EQ(IkProductExpectation(7, 0.3, 0.0), 1.0);
  EXPECT_NEAR(IkProductExpectation(2, 0.3, 1.0), 0.09, 1e-16);
  EXPECT_THROW(IkProductExpectation(11, 0.5, 0.5), ResourceError);
  EXPECT_THROW(IkProductExpectation(3, 0.5, 1.5), DomainError);
}

TEST(JointDistributionTest, Validation) {
  EXPECT_THROW(JointDistribution(2, {0.5, 0.5}), ShapeError);
  EXPECT_THROW(JointDistribution(1, {0.7, 0.7}), DomainError);
  EXPECT_THROW(JointDistribution(1, {-0.5, 1.5}), DomainError);
  EXPECT_NO_THROW(JointDistribution(1, {0.3, 0.7}));
}

TEST(JointDistributionTest, UrnIndicatorsAreExchangeable) {
  const JointDistribution joint = JointDistribution::UrnIndicators({4, 2, 2});
  // Outcomes 00, X1 only, X2 only, both.
  EXPECT_NEAR(joint.mass(0), 1.0 / 6.0, 1e-16);
  EXPECT_NEAR(joint.mass(1), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(joint.mass(2), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(joint.mass(3), 1.0 / 6.0, 1e-16);
}

TEST(NegativeCorrelationTest, WorkedValues) {
  const std::vector<double> half = {0.5, 0.5};
  const auto urn = VerifyNegativeCorrelation(
      JointDistribution::UrnIndicators({4, 2, 2}), half);
  EXPECT_TRUE(urn.holds);
  // Singletons are tight (E[X_i] = p_i), so the smallest slack is about 0.
  EXPECT_NEAR(urn.worst_slack, 0.0, 1e-15);
  EXPECT_NE(urn.worst_index_set, 3u);

  const std::vector<double> p = {0.2, 0.7, 0.4};
  const auto product =
      VerifyNegativeCorrelation(JointDistribution::Product(p), p);
  EXPECT_TRUE(product.holds);
  EXPECT_NEAR(product.worst_slack, 0.0, 1e-16);

  const auto copies =
      VerifyNegativeCorrelation(JointDistribution(2, {0.5, 0, 0, 0.5}), half);
  EXPECT_FALSE(copies.holds);
  EXPECT_EQ(copies.worst_index_set, 3u);
  EXPECT_NEAR(copies.worst_slack, -0.25, 1e-16);
}

TEST(NegativeCorrelationTest, ShapeMismatch) {
  const std::vector<double> three = {0.5, 0.5, 0.5};
  EXPECT_THROW(VerifyNegativeCorrelation(
                   JointDistribution::UrnIndicators({4, 2, 2}), three),
               ShapeError);
}

TEST(ExactJointTailTest, WorkedValues) {
  const JointDistribution product =
      JointDistribution::Product(std::vector<double>(10, 0.5));
  EXPECT_EQ(ExactJointTail(product, 0), 1.0);
  EXPECT_NEAR(ExactJointTail(product, 8), 0.0546875, 1e-16);
  EXPECT_NEAR(ExactJointTail(JointDistribution::UrnIndicators({4, 2, 2}), 2),
              1.0 / 6.0, 1e-16);
}

TEST(ExpectedMaxWithFloorTest, WorkedValues) {
  EXPECT_NEAR(ExpectedMaxWithFloor({4, 0.5}, 2), 2.375, 1e-15);
  EXPECT_EQ(ExpectedMaxWithFloor({4, 0.5}, 1), 2.0);
  EXPECT_NEAR(ExpectedMaxWithFloor({4, 0.5}, 3), 678.0 / 256.0, 1e-15);
  EXPECT_THROW(ExpectedMaxWithFloor({4, 0.5}, 0), DomainError);
}

TEST(ExpectedMaxWithFloorTest, MatchesBruteForceWithFractionalFloor) {
  for (int n : {1, 3, 5, 7}) {
    for (double p : {0.13, 0.5, 0.81}) {
      for (int m : {1, 2, 3, 4}) {
        EXPECT_NEAR(ExpectedMaxWithFloor({n, p}, m),
                    static_cast<double>(reference::ExpectedMaxBrute(n, p, m)),
                    1e-13)
            << n << " " << p << " " << m;
      }
    }
  }
}

TEST(WeightTailCheckTest, WorkedValues) {
  const JointDistribution uniform(2, {0.25, 0.25, 0.25, 0.25});
  const auto self = Lemma1TailCheck(uniform, uniform.masses(), 2.0);
  EXPECT_EQ(self.probability, 0.0);
  EXPECT_EQ(self.limit, 0.5);
  EXPECT_TRUE(self.holds);
  const auto edge =
      Lemma1TailCheck(uniform, std::vector<double>{1, 0, 0, 0}, 4.0);
  EXPECT_EQ(edge.probability, 0.25);
  EXPECT_EQ(edge.limit, 0.25);
  EXPECT_TRUE(edge.holds);
  const auto loose =
      Lemma1TailCheck(uniform, std::vector<double>{0.1, 0.2, 0.3, 0.4}, 1.0);
  EXPECT_LE(loose.probability, 1.0);
}

TEST(WeightTailCheckTest, Errors) {
  const JointDistribution uniform(2, {0.25, 0.25, 0.25, 0.25});
  EXPECT_THROW(Lemma1TailCheck(uniform, std::vector<double>{1, 0, 0}, 2.0),
               ShapeError);
  EXPECT_THROW(Lemma1TailCheck(uniform, std::vector<double>{1, 1, 0, 0}, 2.0),
               DomainError);
  EXPECT_THROW(Lemma1TailCheck(uniform, std::vector<double>{1, 0, 0, 0}, 0.5),
               DomainError);
}

}  // namespace
}  // namespace chernoff
