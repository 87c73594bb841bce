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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "chernoff/errors.h"
#include "chernoff/log_math.h"
#include "chernoff/random.h"
#include "reference.h"

namespace chernoff {
namespace {

TEST(KlBinaryTest, WorkedValues) {
  EXPECT_EQ(KlBinary(0.5, 0.5), 0.0);
  EXPECT_NEAR(KlBinary(1.0, 0.5), std::log(2.0), 1e-15);
  const double expected =
      static_cast<double>(0.6L * std::log(1.2L) + 0.4L * std::log(0.8L));
  EXPECT_NEAR(KlBinary(0.6, 0.5), expected, 1e-16);
  EXPECT_NEAR(KlBinary(0.6, 0.5), 0.0201355, 1e-7);
}

TEST(KlBinaryTest, BoundaryConventions) {
  EXPECT_EQ(KlBinary(0.0, 0.0), 0.0);
  EXPECT_EQ(KlBinary(1.0, 1.0), 0.0);
  EXPECT_EQ(KlBinary(0.3, 0.0), kInf);
  EXPECT_EQ(KlBinary(0.3, 1.0), kInf);
  EXPECT_EQ(KlBinary(1.0, 0.0), kInf);
  EXPECT_NEAR(KlBinary(0.0, 0.25), -std::log(0.75), 1e-16);
  EXPECT_NEAR(KlBinary(1.0, 0.25), std::log(4.0), 1e-15);
}

TEST(KlBinaryTest, RejectsOutOfRange) {
  EXPECT_THROW(KlBinary(-0.1, 0.5), DomainError);
  EXPECT_THROW(KlBinary(0.5, 1.5), DomainError);
  EXPECT_THROW(KlBinary(std::nan(""), 0.5), DomainError);
}

TEST(KlBinaryTest, MatchesLongDoubleReferenceOnGrid) {
  for (int i = 0; i <= 50; ++i) {
    for (int j = 0; j <= 50; ++j) {
      const double a = i / 50.0;
      const double p = j / 50.0;
      const long double ref = reference::Kl(a, p);
      const double got = KlBinary(a, p);
      if (std::isinf(ref)) {
        EXPECT_EQ(got, kInf) << a << " " << p;
      } else {
        EXPECT_NEAR(got, static_cast<double>(ref),
                    1e-14 * std::max(1.0L, ref))
            << a << " " << p;
      }
    }
  }
}

TEST(KlBinaryTest, NonnegativeAndSymmetricOnRandomPairs) {
  StreamRng rng(11, 0);
  for (int i = 0; i < 5000; ++i) {
    const double a = rng.Uniform();
    const double p = rng.Uniform();
    const double d = KlBinary(a, p);
    EXPECT_GE(d, 0.0);
    EXPECT_NEAR(d, KlBinary(1.0 - a, 1.0 - p), 1e-12 * std::max(1.0, d));
  }
}

TEST(KlBinaryTest, IncreasesAwayFromP) {
  for (double p : {0.1, 0.5, 0.9}) {
    double previous = -1.0;
    for (int i = 0; i <= 200; ++i) {
      const double a = p + (1.0 - p) * i / 200.0;
      const double d = KlBinary(a, p);
      EXPECT_GE(d, previous);
      previous = d;
    }
  }
}

TEST(KlGeneralTest, WorkedValues) {
  const DiscreteDistribution uniform4({0.25, 0.25, 0.25, 0.25});
  EXPECT_EQ(KlGeneral(uniform4, uniform4), 0.0);
  const DiscreteDistribution point({1.0, 0.0, 0.0});
  const DiscreteDistribution third({1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_NEAR(KlGeneral(point, third), std::log(3.0), 1e-15);
  EXPECT_NEAR(KlGeneral(DiscreteDistribution({0.6, 0.4}),
                        DiscreteDistribution({0.5, 0.5})),
              KlBinary(0.6, 0.5), 1e-16);
}

TEST(KlGeneralTest, SupportMismatchIsInfinite) {
  EXPECT_EQ(KlGeneral(DiscreteDistribution({0.5, 0.5}),
                      DiscreteDistribution({1.0, 0.0})),
            kInf);
  EXPECT_EQ(KlGeneral(DiscreteDistribution({1.0, 0.0}),
                      DiscreteDistribution({0.5, 0.5})),
            std::log(2.0));
}

TEST(KlGeneralTest, LengthMismatchIsShapeError) {
  EXPECT_THROW(KlGeneral(DiscreteDistribution({1.0}),
                         DiscreteDistribution({0.5, 0.5})),
               ShapeError);
}

TEST(DiscreteDistributionTest, Validation) {
  EXPECT_THROW(DiscreteDistribution({}), DomainError);
  EXPECT_THROW(DiscreteDistribution({0.5, 0.6}), DomainError);
  EXPECT_THROW(DiscreteDistribution({-0.1, 1.1}), DomainError);
  EXPECT_THROW(DiscreteDistribution({std::nan(""), 1.0}), DomainError);
  EXPECT_NO_THROW(DiscreteDistribution({0.1, 0.2, 0.7}));
}

TEST(KlGeneralTest, MatchesReferenceOnRandomDistributions) {
  StreamRng rng(5, 1);
  for (int c = 0; c < 200; ++c) {
    const int m = 2 + static_cast<int>(rng.Below(6));
    std::vector<double> a(m), b(m);
    long double sa = 0, sb = 0;
    for (int i = 0; i < m; ++i) {
      a[i] = rng.Uniform();
      b[i] = rng.Uniform() + 0.01;
      sa += a[i];
      sb += b[i];
    }
    long double ref = 0;
    for (int i = 0; i < m; ++i) {
      a[i] = static_cast<double>(a[i] / sa);
      b[i] = static_cast<double>(b[i] / sb);
    }
    for (int i = 0; i < m; ++i) {
      if (a[i] > 0) ref += a[i] * std::log(static_cast<long double>(a[i]) / b[i]);
    }
    EXPECT_NEAR(KlGeneral(DiscreteDistribution(a), DiscreteDistribution(b)),
                static_cast<double>(std::max(ref, 0.0L)), 1e-13);
  }
}

TEST(LogMathTest, XLogConventions) {
  EXPECT_EQ(XLogX(0.0), 0.0);
  EXPECT_EQ(XLogY(0.0, 0.0), 0.0);
  EXPECT_EQ(XLogY(0.5, 0.0), -kInf);
  EXPECT_EQ(XLogX(0.25) - XLogY(0.25, 0.0), kInf);
  EXPECT_NEAR(XLogX(0.5), 0.5 * std::log(0.5), 1e-17);
}

TEST(LogMathTest, LogSumExp) {
  const std::vector<double> equal = {std::log(0.25), std::log(0.25),
                                     std::log(0.5)};
  EXPECT_NEAR(LogSumExp(equal), 0.0, 1e-15);
  const std::vector<double> with_empty = {-kInf, 1.0, -kInf};
  EXPECT_EQ(LogSumExp(with_empty), 1.0);
  const std::vector<double> empty = {-kInf, -kInf};
  EXPECT_EQ(LogSumExp(empty), -kInf);
  // Terms that would underflow in the linear domain.
  const std::vector<double> tiny = {-2000.0, -2000.0};
  EXPECT_NEAR(LogSumExp(tiny), -2000.0 + std::log(2.0), 1e-12);
}

TEST(LogMathTest, AccumulatorMatchesBatch) {
  StreamRng rng(3, 3);
  std::vector<double> terms;
  LogSumAccumulator acc;
  for (int i = 0; i < 300; ++i) {
    terms.push_back(-1000.0 * rng.Uniform());
    acc.Add(terms.back());
  }
  EXPECT_NEAR(acc.Result(), LogSumExp(terms), 1e-12);
  EXPECT_EQ(LogSumAccumulator().Result(), -kInf);
}

TEST(LogMathTest, LogChooseMatchesExactIntegers) {
  const LogFactorialTable table(100);
  for (int n = 0; n <= 100; ++n) {
    for (int k = 0; k <= n; ++k) {
      const long double exact =
          std::log(static_cast<long double>(reference::Choose(n, k)));
      EXPECT_NEAR(static_cast<double>(table.LogChoose(n, k)),
                  static_cast<double>(exact), 1e-13)
          << n << " " << k;
    }
  }
  EXPECT_EQ(table.LogChoose(5, 6), -std::numeric_limits<long double>::infinity());
  EXPECT_THROW(table.LogFactorial(101), DomainError);
}

}  // namespace
}  // namespace chernoff
