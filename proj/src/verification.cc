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

#include "chernoff/verification.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <string>

#include "chernoff/bounds.h"
#include "chernoff/divergence.h"
#include "chernoff/errors.h"
#include "chernoff/mechanisms.h"
#include "chernoff/montecarlo.h"
#include "chernoff/oracles.h"
#include "chernoff/random.h"

namespace chernoff {
namespace {

std::string Format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

std::vector<double> ProbabilityGrid(int steps) {
  std::vector<double> ps;
  for (int i = 1; i <= steps; ++i) {
    ps.push_back(static_cast<double>(i) / static_cast<double>(steps + 1));
  }
  return ps;
}

// Uniform on [lo, hi).
double UniformIn(StreamRng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.Uniform();
}

// Entries drawn uniformly, with a 1-in-5 chance of an exact 0 or 1 so the
// extreme row-sum shifts get exercised.
double ScoreEntry(StreamRng& rng) {
  switch (rng.Below(10)) {
    case 0:
      return 0.0;
    case 1:
      return 1.0;
    default:
      return rng.Uniform();
  }
}

// Random nonnegative weights over `size` outcomes scaled to total `total`.
std::vector<double> NormalizedWeights(std::vector<double> raw, double total) {
  long double sum = 0.0L;
  for (double w : raw) sum += w;
  if (sum == 0.0L) {
    raw.assign(raw.size(), 0.0);
    return raw;
  }
  for (double& w : raw) w = static_cast<double>(w * total / sum);
  return raw;
}

JointDistribution RandomJoint(StreamRng& rng, int n, bool sparse) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> masses(count);
  for (double& m : masses) {
    m = (sparse && rng.Below(4) != 0) ? 0.0 : rng.Uniform();
  }
  masses[rng.Below(count)] += 1.0;  // never all zero
  masses = NormalizedWeights(std::move(masses), 1.0);
  return JointDistribution(n, std::move(masses));
}

}  // namespace

void SuiteReport::Merge(const SuiteReport& other) {
  checks_ += other.checks_;
  failures_ += other.failures_;
  worst_slack_ = std::min(worst_slack_, other.worst_slack_);
  if (first_failure_.empty()) first_failure_ = other.first_failure_;
}

void SuiteReport::Fail(std::string description) {
  if (failures_++ == 0) first_failure_ = std::move(description);
}

SuiteReport RunDivergenceSuite() {
  SuiteReport report("divergence");
  StreamRng rng(0x5eed, 0);

  // Nonnegativity on random finite distributions, and D(P || P) = 0.
  for (int c = 0; c < 500; ++c) {
    const std::size_t m = 1 + rng.Below(8);
    std::vector<double> a(m), b(m);
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = rng.Below(4) == 0 ? 0.0 : rng.Uniform();
      b[i] = rng.Below(8) == 0 ? 0.0 : rng.Uniform();
    }
    a[rng.Below(m)] += 0.5;
    b[rng.Below(m)] += 0.5;
    const DiscreteDistribution p(NormalizedWeights(a, 1.0));
    const DiscreteDistribution q(NormalizedWeights(b, 1.0));
    const double d = KlGeneral(p, q);
    report.Expect(d >= 0.0, [&] { return Format("KlGeneral < 0 (%g)", d); });
    report.Expect(KlGeneral(p, p) == 0.0,
                  [] { return std::string("KlGeneral(P, P) != 0"); });
  }

  // Binary symmetry D(1 - a || 1 - p) = D(a || p) on a 101 x 101 grid, and
  // agreement with the general form at m = 2.
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double a = i / 100.0;
      const double p = j / 100.0;
      const double d = KlBinary(a, p);
      const double mirrored = KlBinary(1.0 - a, 1.0 - p);
      const bool both_inf = std::isinf(d) && std::isinf(mirrored);
      report.ExpectSlack(both_inf ? 0.0 : -std::abs(d - mirrored), 1e-12, [&] {
        return Format("KL symmetry fails at a=%g p=%g: %.17g vs %.17g", a, p,
                      d, mirrored);
      });
      const double general = KlGeneral(DiscreteDistribution({a, 1.0 - a}),
                                       DiscreteDistribution({p, 1.0 - p}));
      const bool general_inf = std::isinf(d) && std::isinf(general);
      report.ExpectSlack(general_inf ? 0.0 : -std::abs(d - general), 1e-12,
                         [&] {
                           return Format("KlGeneral != KlBinary at a=%g p=%g",
                                         a, p);
                         });
    }
  }

  // Monotone in a >= p on 1001 points.
  for (double p : {0.0, 0.05, 0.3, 0.5, 0.7, 0.95}) {
    double previous = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double a = std::min(1.0, p + (1.0 - p) * i / 1000.0);
      const double d = KlBinary(a, p);
      const double step = d == previous ? 0.0 : d - previous;
      report.ExpectSlack(step, 1e-15, [&] {
        return Format("KL decreases at a=%g p=%g", a, p);
      });
      previous = d;
    }
  }

  // Edge values: D(0 || p) = -ln(1 - p), D(1 || p) = -ln p; infinities.
  for (int j = 1; j < 100; ++j) {
    const double p = j / 100.0;
    report.ExpectSlack(-std::abs(KlBinary(0.0, p) + std::log1p(-p)), 1e-15,
                       [&] { return Format("D(0 || %g) wrong", p); });
    report.ExpectSlack(-std::abs(KlBinary(1.0, p) + std::log(p)), 1e-15,
                       [&] { return Format("D(1 || %g) wrong", p); });
    report.Expect(KlBinary(p, 0.0) == kInf && KlBinary(p, 1.0) == kInf,
                  [&] { return Format("D(%g || 0 or 1) not +inf", p); });
  }
  report.Expect(KlBinary(0.0, 0.0) == 0.0 && KlBinary(1.0, 1.0) == 0.0,
                [] { return std::string("D(p || p) != 0 at the boundary"); });
  return report;
}

SuiteReport RunOracleConsistencySuite() {
  SuiteReport report("oracle-consistency");
  for (std::int64_t n : {1, 2, 5, 10, 50, 100, 500, 1000}) {
    for (double p : {0.0, 0.01, 0.1, 0.3, 0.5, 0.9, 1.0}) {
      const BinomialSpec spec{n, p};
      for (std::int64_t k = 0; k <= n; ++k) {
        const double upper = ExactBinomialTail(spec, k, Direction::kUpper);
        const double lower =
            k == 0 ? 0.0 : ExactBinomialTail(spec, k - 1, Direction::kLower);
        report.ExpectSlack(-std::abs(upper + lower - 1.0), 1e-12, [&] {
          return Format("tails do not sum to 1 at n=%lld p=%g k=%lld",
                        static_cast<long long>(n), p,
                        static_cast<long long>(k));
        });
      }
    }
  }
  for (int n = 1; n <= kMaxSingleEnumerationBits; ++n) {
    for (double p : {0.1, 0.5, 0.8}) {
      const std::vector<double> p_list(n, p);
      const JointDistribution joint = JointDistribution::Product(p_list);
      for (int k = 0; k <= n + 1; ++k) {
        const double binomial = ExactBinomialTail({n, p}, k, Direction::kUpper);
        report.ExpectSlack(-std::abs(ExactJointTail(joint, k) - binomial),
                           1e-12, [&] {
                             return Format("joint tail != binomial at n=%d k=%d",
                                           n, k);
                           });
        report.ExpectSlack(
            -std::abs(ExactPoissonBinomialTail(p_list, k) - binomial), 1e-12,
            [&] {
              return Format("Poisson-binomial != binomial at n=%d k=%d", n, k);
            });
      }
    }
  }
  // Hypergeometric tails start at 1 and never increase.
  for (std::int64_t big_n : {1, 7, 40, 300}) {
    for (std::int64_t red = 0; red <= big_n; red += std::max<std::int64_t>(1, big_n / 5)) {
      for (std::int64_t draws = 0; draws <= big_n;
           draws += std::max<std::int64_t>(1, big_n / 4)) {
        const UrnSpec urn{big_n, red, draws};
        double previous = ExactHypergeometricTail(urn, 0);
        report.Expect(previous == 1.0,
                      [] { return std::string("hypergeometric tail(0) != 1"); });
        for (std::int64_t k = 1; k <= draws + 1; ++k) {
          const double tail = ExactHypergeometricTail(urn, k);
          report.ExpectSlack(previous - tail, 1e-15, [&] {
            return Format("hypergeometric tail increases at k=%lld",
                          static_cast<long long>(k));
          });
          previous = tail;
        }
      }
    }
  }
  return report;
}

SuiteReport RunDominationSuite(const DominationConfig& config) {
  SuiteReport report("domination");
  for (std::int64_t n : config.ns) {
    for (double p : ProbabilityGrid(config.p_steps)) {
      for (int j = 0; j <= config.t_steps; ++j) {
        const double t = (1.0 - p) * j / config.t_steps;
        const std::int64_t k = UpperThreshold(n, p, t);
        const double exact = ExactBinomialTail({n, p}, k, Direction::kUpper);
        const double kl = KlTailBound({n, p, t, Direction::kUpper}).value;
        const MultiplicativeQuery mq{p * static_cast<double>(n), t / p,
                                     Direction::kUpper, n};
        const double mult = MultiplicativeBound(mq).value;
        const double simple = SimplifiedBound(mq).value;
        auto where = [&](const char* what) {
          return Format("%s at n=%lld p=%g t=%.17g (exact=%.17g kl=%.17g "
                        "mult=%.17g simple=%.17g)",
                        what, static_cast<long long>(n), p, t, exact, kl, mult,
                        simple);
        };
        report.ExpectSlack(kl - exact, config.tolerance,
                           [&] { return where("exact > KL"); });
        report.ExpectSlack(mult - kl, config.tolerance,
                           [&] { return where("KL > multiplicative"); });
        report.ExpectSlack(simple - mult, config.tolerance,
                           [&] { return where("multiplicative > simplified"); });
      }
    }
  }
  return report;
}

SuiteReport RunSteinkeUllmanSuite(const DominationConfig& config) {
  SuiteReport report("su-weak");
  for (std::int64_t n : config.ns) {
    for (double p : ProbabilityGrid(config.p_steps)) {
      for (int j = 0; j <= config.t_steps; ++j) {
        const double t = (1.0 - p) * j / config.t_steps;
        const double exact = ExactBinomialTail({n, p}, UpperThreshold(n, p, t),
                                               Direction::kUpper);
        const double bound = SteinkeUllmanBound(n, t).value;
        report.ExpectSlack(bound - exact, config.tolerance, [&] {
          return Format("exact %.17g > e^{1 - t^2 n / 64} = %.17g at n=%lld "
                        "p=%g t=%g",
                        exact, bound, static_cast<long long>(n), p, t);
        });
      }
    }
  }
  const double spot = SteinkeUllmanBound(400, 0.5).value;
  report.ExpectSlack(-std::abs(spot - std::exp(-0.5625)), 1e-12, [&] {
    return Format("e^{1 - t^2 n / 64} at n=400 t=0.5 gave %.17g", spot);
  });
  return report;
}

SuiteReport RunOptimalitySuite(const OptimalityConfig& config) {
  SuiteReport report("optimality");
  StreamRng rng(config.seed, 0x0971);
  for (double p : ProbabilityGrid(config.p_steps)) {
    for (int j = 1; j <= config.t_steps; ++j) {
      const double t = (1.0 - p) * j / (config.t_steps + 1);
      const TailQuery query{config.n, p, t, Direction::kUpper};
      const double kl = KlTailBound(query).value;
      for (LambdaMethod method :
           {LambdaMethod::kMoment, LambdaMethod::kIk}) {
        const double best_lambda = OptimalLambda(p, t, method);
        const double best = ParametricBound(query, best_lambda, method).value;
        report.ExpectSlack(
            config.agreement_tolerance * kl - std::abs(best - kl), 0.0, [&] {
              return Format("%s optimum %.17g != KL %.17g at p=%g t=%g",
                            LambdaMethodName(method), best, kl, p, t);
            });
        for (int r = 0; r < config.perturbations; ++r) {
          double lambda = best_lambda * std::exp(UniformIn(rng, -1.0, 1.0));
          if (method == LambdaMethod::kIk) {
            lambda = std::min(lambda, 1.0);
          }
          const double other = ParametricBound(query, lambda, method).value;
          report.ExpectSlack(other - best, config.optimality_tolerance, [&] {
            return Format("%s lambda=%.17g beats the optimum at p=%g t=%g",
                          LambdaMethodName(method), lambda, p, t);
          });
        }
      }
    }
  }
  return report;
}

SuiteReport RunRelaxationSuite() {
  SuiteReport report("relaxations");
  constexpr double kTol = 1e-12;
  const std::vector<std::int64_t> ns = {1, 5, 20, 100, 400};

  // Lower tail of X is the upper tail of n - X.
  for (std::int64_t n : ns) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      for (int j = 0; j <= 10; ++j) {
        const double t = p * j / 10.0;
        const double lower = KlTailBound({n, p, t, Direction::kLower}).log_value;
        const double upper =
            KlTailBound({n, 1.0 - p, t, Direction::kUpper}).log_value;
        report.Expect(lower == upper, [&] {
          return Format("lower-tail reduction differs at n=%lld p=%g t=%g",
                        static_cast<long long>(n), p, t);
        });
      }
    }
  }

  for (std::int64_t n : ns) {
    const double nd = static_cast<double>(n);
    for (double p : ProbabilityGrid(19)) {
      const double mu = p * nd;
      for (int j = 0; j <= 20; ++j) {
        // Upper: t = delta p in [0, 1 - p].
        const double t_up = (1.0 - p) * j / 20.0;
        const double delta_up = t_up / p;
        const double kl_up = KlTailBound({n, p, t_up, Direction::kUpper}).value;
        const double mult_up =
            MultiplicativeBound({mu, delta_up, Direction::kUpper}).value;
        report.ExpectSlack(mult_up - kl_up, kTol, [&] {
          return Format("KL upper > multiplicative at n=%lld p=%g t=%g",
                        static_cast<long long>(n), p, t_up);
        });

        // Lower: t = delta p in [0, p].
        const double delta = j / 20.0;
        const double t_low = delta * p;
        const double kl_low = KlTailBound({n, p, t_low, Direction::kLower}).value;
        const double mult_low =
            MultiplicativeBound({mu, delta, Direction::kLower}).value;
        report.ExpectSlack(mult_low - kl_low, kTol, [&] {
          return Format("KL lower > multiplicative at n=%lld p=%g delta=%g",
                        static_cast<long long>(n), p, delta);
        });
        const std::int64_t k_low = LowerThreshold(n, p, t_low);
        const double exact_low =
            k_low < 0 ? 0.0
                      : ExactBinomialTail({n, p}, k_low, Direction::kLower);
        report.ExpectSlack(kl_low - exact_low, kTol, [&] {
          return Format("exact lower tail > KL at n=%lld p=%g delta=%g",
                        static_cast<long long>(n), p, delta);
        });
        if (delta > 0.0 && delta < 1.0) {
          const double simple_low =
              SimplifiedBound({mu, delta, Direction::kLower}).value;
          report.ExpectSlack(simple_low - mult_low, kTol, [&] {
            return Format("multiplicative lower > e^{-d^2 mu / 2} at n=%lld "
                          "p=%g delta=%g",
                          static_cast<long long>(n), p, delta);
          });
        }
      }

      // Two-sided and large-delta upper forms against the exact tails.
      for (double delta : {0.05, 0.2, 0.5, 1.0, 1.5, 3.0, 10.0}) {
        const double upper_x = (1.0 + delta) * mu;
        const double lower_x = (1.0 - delta) * mu;
        const auto k_up = static_cast<std::int64_t>(
            std::ceil(upper_x - 1e-12 * std::max(1.0, upper_x)));
        const auto k_low = static_cast<std::int64_t>(
            std::floor(lower_x + 1e-12 * std::max(1.0, std::abs(lower_x))));
        const double exact_up =
            k_up > n ? 0.0 : ExactBinomialTail({n, p}, k_up, Direction::kUpper);
        const double exact_low =
            k_low < 0 ? 0.0
                      : ExactBinomialTail({n, p}, k_low, Direction::kLower);
        const double simple_up =
            SimplifiedBound({mu, delta, Direction::kUpper}).value;
        const double two_sided =
            SimplifiedBound({mu, delta, Direction::kTwoSided}).value;
        report.ExpectSlack(simple_up - exact_up, kTol, [&] {
          return Format("exact upper > e^{-min(d^2,d) mu / 4} at n=%lld p=%g "
                        "delta=%g",
                        static_cast<long long>(n), p, delta);
        });
        report.ExpectSlack(two_sided - (exact_up + exact_low), kTol, [&] {
          return Format("two-sided tail exceeds bound at n=%lld p=%g delta=%g",
                        static_cast<long long>(n), p, delta);
        });
      }
    }
  }

  // 2^{-t} for t >= 2 e mu.
  for (std::int64_t n : {10, 50, 100, 400}) {
    for (double p : {0.001, 0.01, 0.02, 0.05, 0.1}) {
      const double mu = p * static_cast<double>(n);
      const double start = 2.0 * std::numbers::e * mu;
      for (double t_abs = start; t_abs <= static_cast<double>(n) + 1.0;
           t_abs += std::max(0.5, start / 4.0)) {
        const auto k = static_cast<std::int64_t>(std::ceil(t_abs));
        const double exact =
            k > n ? 0.0 : ExactBinomialTail({n, p}, k, Direction::kUpper);
        const double bound = AbsoluteThresholdBound(mu, t_abs).value;
        report.ExpectSlack(bound - exact, kTol, [&] {
          return Format("exact tail > 2^{-t} at n=%lld p=%g t=%g",
                        static_cast<long long>(n), p, t_abs);
        });
      }
    }
  }
  return report;
}

SuiteReport RunHypergeometricSuite(const HypergeometricConfig& config) {
  SuiteReport report("hypergeometric");
  for (std::int64_t big_n = 1; big_n <= config.claims_max_population; ++big_n) {
    for (std::int64_t red = 0; red <= big_n; ++red) {
      for (std::int64_t draws = 0; draws <= big_n; ++draws) {
        for (double tau : config.taus) {
          const auto claims =
              VerifyHypergeometricClaims({big_n, red, draws}, tau);
          report.ExpectSlack(claims.worst_relative_margin, config.tolerance,
                             [&] {
                               return Format(
                                   "urn claim margin %.3g at N=%lld P=%lld "
                                   "n=%lld tau=%g",
                                   claims.worst_relative_margin,
                                   static_cast<long long>(big_n),
                                   static_cast<long long>(red),
                                   static_cast<long long>(draws), tau);
                             });
        }
      }
    }
  }

  for (std::int64_t big_n : config.populations) {
    std::vector<std::int64_t> reds = {0, 1, big_n / 10, big_n / 4, big_n / 2,
                                      (3 * big_n) / 4, big_n - 1, big_n};
    std::vector<std::int64_t> sizes = {1, 2, big_n / 4, big_n / 2,
                                       (3 * big_n) / 4, big_n};
    std::sort(reds.begin(), reds.end());
    reds.erase(std::unique(reds.begin(), reds.end()), reds.end());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (std::int64_t red : reds) {
      if (red < 0 || red > big_n) continue;
      const double p = static_cast<double>(red) / static_cast<double>(big_n);
      for (std::int64_t draws : sizes) {
        if (draws < 1 || draws > big_n) continue;
        for (int j = 0; j <= config.t_steps; ++j) {
          const double t = (1.0 - p) * j / config.t_steps;
          const std::int64_t k = UpperThreshold(draws, p, t);
          const double exact = ExactHypergeometricTail({big_n, red, draws}, k);
          const double bound = HypergeometricBound(big_n, red, draws, t).value;
          report.ExpectSlack(bound - exact, config.tolerance, [&] {
            return Format("hypergeometric tail %.17g > bound %.17g at N=%lld "
                          "P=%lld n=%lld t=%g",
                          exact, bound, static_cast<long long>(big_n),
                          static_cast<long long>(red),
                          static_cast<long long>(draws), t);
          });
        }
      }
    }
  }

  const double spot = ExactHypergeometricTail({10, 5, 4}, 3);
  report.ExpectSlack(-std::abs(spot - 55.0 / 210.0), 1e-13, [&] {
    return Format("Pr[H(10,5,4) >= 3] = %.17g, expected 55/210", spot);
  });
  return report;
}

SuiteReport RunEq2Suite(int max_n, double tolerance) {
  SuiteReport report("eq2");
  for (int n = 0; n <= max_n; ++n) {
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double p = i / 10.0;
        const double lambda = j / 10.0;
        const double enumerated = IkProductExpectation(n, p, lambda);
        const double closed = std::pow(lambda * p + 1.0 - lambda, n);
        report.ExpectSlack(-std::abs(enumerated - closed), tolerance, [&] {
          return Format("E[prod X_I] = %.17g != %.17g at n=%d p=%g lambda=%g",
                        enumerated, closed, n, p, lambda);
        });
      }
    }
  }
  return report;
}

SuiteReport RunValidWeightSuite(const ValidWeightConfig& config) {
  SuiteReport report("weight-tail");
  StreamRng rng(config.seed, 0x1e3a);
  for (int n = config.min_n; n <= config.max_n; ++n) {
    const std::size_t count = std::size_t{1} << n;
    for (int f = 0; f < config.weight_functions; ++f) {
      const JointDistribution joint =
          f % 4 == 3 ? JointDistribution::Product(std::vector<double>(
                           n, UniformIn(rng, 0.05, 0.95)))
                     : RandomJoint(rng, n, f % 4 == 2);
      std::vector<double> raw(count);
      switch (f % 3) {
        case 0:  // unrelated to the joint
          for (double& w : raw) w = rng.Uniform();
          break;
        case 1:  // a noisy copy of the joint, which often exceeds s p_x
          for (std::size_t x = 0; x < count; ++x) {
            raw[x] = joint.mass(x) * UniformIn(rng, 0.0, 3.0);
          }
          break;
        default:  // concentrated on a few strings
          for (int h = 0; h < 3; ++h) raw[rng.Below(count)] += rng.Uniform();
          break;
      }
      const std::vector<double> weights =
          NormalizedWeights(std::move(raw), rng.Uniform());
      for (double s : config.s_values) {
        const auto check = Lemma1TailCheck(joint, weights, s);
        report.ExpectSlack(check.limit - check.probability, 1e-12, [&] {
          return Format("Pr[w >= s p] = %.17g > 1/s at n=%d s=%g",
                        check.probability, n, s);
        });
      }
    }
  }

  // Equality edge: uniform on {0,1}^2 and all weight on 00.
  const JointDistribution uniform(2, {0.25, 0.25, 0.25, 0.25});
  const auto edge = Lemma1TailCheck(uniform, std::vector<double>{1, 0, 0, 0}, 4.0);
  report.Expect(edge.holds && edge.probability == 0.25, [&] {
    return Format("equality edge gave %.17g", edge.probability);
  });
  const auto self = Lemma1TailCheck(uniform, uniform.masses(), 2.0);
  report.Expect(self.probability == 0.0,
                [] { return std::string("w = p exceeded 2p"); });
  return report;
}

SuiteReport RunEncodingSuite(int max_n) {
  SuiteReport report("encoding");
  for (int n = 1; n <= max_n; ++n) {
    for (double p : {0.1, 0.3, 0.5, 0.7}) {
      const JointDistribution truth =
          JointDistribution::Product(std::vector<double>(n, p));
      for (int j = 0; j <= 8; ++j) {
        const double t = (1.0 - p) * j / 8.0;
        const EncodingScheme scheme{n, p, t};
        const std::vector<double> weights = EncodingWeights(scheme);
        long double total = 0.0L;
        for (double w : weights) total += w;
        report.ExpectSlack(-std::abs(static_cast<double>(total) - 1.0), 1e-12,
                           [&] {
                             return Format("weights sum to %.17g at n=%d",
                                           static_cast<double>(total), n);
                           });

        const double divergence_rate =
            static_cast<double>(n) * KlBinary(std::min(1.0, p + t), p);
        const std::int64_t threshold = UpperThreshold(n, p, t);
        const bool strict = t > 0.0 && p + t < 1.0;
        for (std::int64_t k = 0; k <= n; ++k) {
          const double log_ratio = EncodingLogRatio(scheme, k);
          if (k < n && t > 0.0) {
            const double next = EncodingLogRatio(scheme, k + 1);
            report.Expect(strict ? next > log_ratio : next >= log_ratio, [&] {
              return Format("ratio not increasing at n=%d p=%g t=%g k=%lld", n,
                            p, t, static_cast<long long>(k));
            });
          }
          if (k >= threshold) {
            report.ExpectSlack(log_ratio - divergence_rate, 1e-9, [&] {
              return Format("ratio below e^{nD} at n=%d p=%g t=%g k=%lld", n,
                            p, t, static_cast<long long>(k));
            });
          }
        }

        // The encoding route reproduces the KL bound.
        const double tail = ExactJointTail(truth, threshold);
        const double bound = std::exp(-divergence_rate);
        report.ExpectSlack(bound - tail, 1e-12, [&] {
          return Format("enumerated tail %.17g > e^{-nD} at n=%d p=%g t=%g",
                        tail, n, p, t);
        });
        const auto lemma = Lemma1TailCheck(truth, weights,
                                           std::exp(divergence_rate));
        report.Expect(lemma.holds, [&] {
          return Format("encoding weights exceed the 1/s tail limit at n=%d p=%g t=%g",
                        n, p, t);
        });
      }
    }
    // Equality at k = (p + t) n for an integer threshold.
    for (int k = 1; k < n; ++k) {
      const double shifted = static_cast<double>(k) / n;
      const double p = shifted / 2.0;
      const EncodingScheme scheme{n, p, shifted - p};
      const double expected = n * KlBinary(shifted, p);
      report.ExpectSlack(
          -std::abs(EncodingLogRatio(scheme, k) - expected),
          1e-12 * std::max(1.0, expected), [&] {
            return Format("log-ratio != nD at n=%d k=%d", n, k);
          });
    }
  }
  return report;
}

SuiteReport RunSelectorSuite(const SelectorConfig& config) {
  SuiteReport report("selector");
  StreamRng rng(config.seed, 0x5e1e);
  const double tol = config.tolerance;
  for (int c = 0; c < config.cases; ++c) {
    const std::size_t m = 1 + rng.Below(config.max_rows);
    const std::size_t n = 1 + rng.Below(config.max_cols);
    const double gamma = config.gammas[c % config.gammas.size()];
    std::vector<double> entries(m * n);
    for (double& a : entries) a = ScoreEntry(rng);
    const ScoreMatrix scores(m, n, std::move(entries));
    const std::size_t column = rng.Below(n);
    std::vector<double> replacement(m);
    for (double& a : replacement) a = ScoreEntry(rng);

    const SelectorDistribution dist = MakeSelectorDistribution(scores, gamma);
    long double total = 0.0L;
    for (double q : dist.probabilities) total += q;
    report.ExpectSlack(-std::abs(static_cast<double>(total) - 1.0), tol, [&] {
      return Format("selector mass %.17g (case %d)", static_cast<double>(total),
                    c);
    });

    const std::vector<double> sums = scores.RowSums();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        if (sums[i] > sums[k] + 1e-9) {
          report.Expect(dist.probabilities[i] > dist.probabilities[k], [&] {
            return Format("higher row sum got lower probability (case %d)", c);
          });
        }
      }
    }
    const auto top =
        std::max_element(dist.probabilities.begin(), dist.probabilities.end()) -
        dist.probabilities.begin();
    const double best = *std::max_element(sums.begin(), sums.end());
    report.ExpectSlack(sums[top] - best, tol, [&] {
      return Format("selector mode is not a maximal row (case %d)", c);
    });

    const StabilityReport stability =
        StabilityAudit(scores, column, replacement, gamma);
    for (double ratio : stability.ratios) {
      const double slack =
          std::min(ratio - 1.0 / (gamma * gamma), gamma * gamma - ratio);
      report.ExpectSlack(slack, tol, [&] {
        return Format("probability ratio %.17g outside [gamma^-2, gamma^2], "
                      "gamma=%g (case %d)",
                      ratio, gamma, c);
      });
    }
    report.ExpectSlack(
        std::log(gamma) - std::abs(stability.log_normalizer_shift), tol, [&] {
          return Format("normalizer moved by more than gamma (case %d)", c);
        });

    const AccuracyReport accuracy = AccuracyGap(scores, gamma);
    report.ExpectSlack(std::min(accuracy.gap, accuracy.limit - accuracy.gap),
                       tol, [&] {
                         return Format("accuracy gap %.17g outside [0, %.17g] "
                                       "(case %d)",
                                       accuracy.gap, accuracy.limit, c);
                       });
  }

  const ScoreMatrix two_rows = ScoreMatrix::FromRows({{1.0}, {0.0}});
  const SelectorDistribution spot = MakeSelectorDistribution(two_rows, 2.0);
  report.ExpectSlack(-std::max(std::abs(spot.probabilities[0] - 2.0 / 3.0),
                               std::abs(spot.probabilities[1] - 1.0 / 3.0)),
                     1e-15, [&] {
                       return Format("(1,0), gamma 2 gave (%.17g, %.17g)",
                                     spot.probabilities[0],
                                     spot.probabilities[1]);
                     });

  constexpr std::size_t kDraws = 100'000;
  const auto draws = SampleSelector(spot, config.seed, kDraws);
  const double freq =
      static_cast<double>(std::count(draws.begin(), draws.end(), 0)) / kDraws;
  const double se = std::sqrt((2.0 / 9.0) / kDraws);
  report.ExpectSlack(4.0 * se - std::abs(freq - 2.0 / 3.0), 0.0, [&] {
    return Format("sampled frequency %.6f of row 0 is more than 4 SE from 2/3",
                  freq);
  });
  return report;
}

SuiteReport RunMaxExpectationSuite(const MaxExpectationConfig& config) {
  SuiteReport report("max-expectation");
  for (std::int64_t n = 1; n <= config.max_n; ++n) {
    const double nd = static_cast<double>(n);
    for (double p : config.ps) {
      const double floor_value = p * nd;
      for (std::int64_t m : config.ms) {
        const double log_m = std::log(static_cast<double>(m));
        const double expected = ExpectedMaxWithFloor({n, p}, m);
        auto tol = [&](double rhs) {
          return config.tolerance * std::max(1.0, rhs);
        };
        if (log_m <= nd) {
          const double log_bound = floor_value + 5.0 * std::sqrt(nd * log_m);
          report.ExpectSlack(log_bound - expected, tol(log_bound), [&] {
            return Format("E[max] = %.17g > pn + 5 sqrt(n ln m) at n=%lld "
                          "p=%g m=%lld",
                          expected, static_cast<long long>(n), p,
                          static_cast<long long>(m));
          });
        }
        std::vector<double> gammas = config.fixed_gammas;
        gammas.push_back(1.0 + std::sqrt(log_m) / std::sqrt(nd));
        for (double gamma : gammas) {
          if (!(gamma > 1.0)) continue;
          const double gamma_bound =
              gamma * gamma * floor_value + log_m / std::log(gamma);
          report.ExpectSlack(gamma_bound - expected, tol(gamma_bound), [&] {
            return Format("E[max] = %.17g > gamma^2 pn + log_gamma m at "
                          "n=%lld p=%g m=%lld gamma=%g",
                          expected, static_cast<long long>(n), p,
                          static_cast<long long>(m), gamma);
          });
        }
      }
    }
  }

  // Markov step for the selector accuracy at m = ceil(exp(c t^2 n)).
  const double c = std::pow((std::numbers::e - 1.0) / (5.0 * std::numbers::e), 2);
  for (std::int64_t n : {64, 100, 200, 300}) {
    const double nd = static_cast<double>(n);
    for (double p : config.ps) {
      for (int j = 0; j <= 10; ++j) {
        const double t_min = 8.0 / std::sqrt(nd);
        if (t_min > 1.0 - p) continue;
        const double t = t_min + (1.0 - p - t_min) * j / 10.0;
        const double real_m = std::exp(c * t * t * nd);
        const auto m = static_cast<std::int64_t>(std::ceil(real_m));
        if (m < 2 || std::log(static_cast<double>(m)) > nd || m > 1'000'000) {
          continue;
        }
        const double alpha = ExactBinomialTail({n, p}, UpperThreshold(n, p, t),
                                               Direction::kUpper);
        const double expected = ExpectedMaxWithFloor({n, p}, m);
        const double hit = -std::expm1(static_cast<double>(m - 1) *
                                       std::log1p(-alpha));
        const double markov = (expected - p * nd) / (t * nd);
        report.ExpectSlack(markov - hit, config.tolerance, [&] {
          return Format("Markov step fails at n=%lld p=%g t=%g m=%lld",
                        static_cast<long long>(n), p, t,
                        static_cast<long long>(m));
        });
        const double log_bound =
            p * nd + 5.0 * std::sqrt(nd * std::log(static_cast<double>(m)));
        report.ExpectSlack(log_bound - expected, config.tolerance * log_bound, [&] {
          return Format("pn + 5 sqrt(n ln m) bound fails at the pipeline m=%lld",
                        static_cast<long long>(m));
        });
      }
    }
  }

  const double spot = ExpectedMaxWithFloor({4, 0.5}, 2);
  report.ExpectSlack(-std::abs(spot - 2.375), 1e-15, [&] {
    return Format("E[max(B(4, 1/2), 2)] = %.17g, expected 2.375", spot);
  });
  return report;
}

SuiteReport RunNegativeCorrelationSuite(
    const NegativeCorrelationConfig& config) {
  SuiteReport report("negcorr");
  for (std::int64_t big_n = 1; big_n <= config.max_population; ++big_n) {
    for (std::int64_t red = 0; red <= big_n; ++red) {
      const double p = static_cast<double>(red) / static_cast<double>(big_n);
      const int max_draws =
          static_cast<int>(std::min<std::int64_t>(config.max_draws, big_n));
      for (int draws = 1; draws <= max_draws; ++draws) {
        const UrnSpec urn{big_n, red, draws};
        const JointDistribution joint = JointDistribution::UrnIndicators(urn);
        const std::vector<double> p_list(draws, p);
        const auto correlation = VerifyNegativeCorrelation(joint, p_list);
        report.ExpectSlack(correlation.worst_slack, config.tolerance, [&] {
          return Format("urn indicators not negatively correlated at N=%lld "
                        "P=%lld n=%d",
                        static_cast<long long>(big_n),
                        static_cast<long long>(red), draws);
        });
        const double mean = MeanParameter(p_list);
        for (int j = 0; j <= config.t_steps; ++j) {
          const double t = (1.0 - mean) * j / config.t_steps;
          const std::int64_t k = UpperThreshold(draws, mean, t);
          const double tail = ExactJointTail(joint, k);
          const double bound =
              KlTailBound({draws, mean, t, Direction::kUpper}).value;
          report.ExpectSlack(bound - tail, config.tolerance, [&] {
            return Format("joint tail %.17g > KL bound %.17g at N=%lld P=%lld "
                          "n=%d t=%g",
                          tail, bound, static_cast<long long>(big_n),
                          static_cast<long long>(red), draws, t);
          });
          const double hyper = ExactHypergeometricTail(urn, k);
          report.ExpectSlack(-std::abs(tail - hyper), 1e-12, [&] {
            return Format("joint tail != hypergeometric tail at N=%lld",
                          static_cast<long long>(big_n));
          });
        }
      }
    }
  }

  const JointDistribution copies(2, {0.5, 0.0, 0.0, 0.5});
  const auto rejected =
      VerifyNegativeCorrelation(copies, std::vector<double>{0.5, 0.5});
  report.Expect(!rejected.holds && rejected.worst_index_set == 3u, [] {
    return std::string("perfectly correlated pair was accepted");
  });
  return report;
}

SuiteReport RunMonteCarloSuite(const MonteCarloConfig& config) {
  SuiteReport report("montecarlo");
  StreamRng rng(config.seed, 0x3c3c);

  int within = 0;
  for (int c = 0; c < config.cases; ++c) {
    SampleModel model;
    switch (c % 3) {
      case 0:
        model = IidModel{static_cast<std::int64_t>(1 + rng.Below(100)),
                         UniformIn(rng, 0.05, 0.95)};
        break;
      case 1: {
        HeterogeneousModel h;
        h.p_list.resize(1 + rng.Below(50));
        for (double& p : h.p_list) p = rng.Uniform();
        model = std::move(h);
        break;
      }
      default: {
        const auto big_n = static_cast<std::int64_t>(2 + rng.Below(199));
        const auto red = static_cast<std::int64_t>(rng.Below(big_n + 1));
        const auto draws = static_cast<std::int64_t>(1 + rng.Below(big_n));
        model = UrnSpec{big_n, red, draws};
        break;
      }
    }
    const SimulationSpec spec{model, config.trials, rng()};
    const std::int64_t size = spec.Size();
    std::vector<std::int64_t> candidates;
    for (std::int64_t k = 0; k <= size; ++k) {
      const double exact = ExactModelTail(model, k);
      if (exact >= 1e-3 && exact <= 1.0 - 1e-3) candidates.push_back(k);
    }
    const std::int64_t k =
        candidates.empty() ? 0 : candidates[rng.Below(candidates.size())];
    const double exact = ExactModelTail(model, k);
    const EmpiricalTail tail = EmpiricalTailOf(spec, k, config.threads);
    const double deviation = std::abs(tail.estimate - exact);
    if (deviation <= 4.0 * tail.standard_error) ++within;
  }
  report.Expect(within >= config.required_within, [&] {
    return Format("only %d of %d empirical tails within 4 SE", within,
                  config.cases);
  });

  // Thread-count invariance.
  const SimulationSpec reference{UrnSpec{30, 11, 9}, 20'000, config.seed};
  const auto sums_single = SimulateSum(reference, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    report.Expect(SimulateSum(reference, threads) == sums_single, [&] {
      return Format("sums differ with %u threads", threads);
    });
  }
  const SimulationSpec iid{IidModel{40, 0.3}, 20'000, config.seed};
  report.Expect(SimulateHistogram(iid, 1) == SimulateHistogram(iid, 5),
                [] { return std::string("histograms differ across threads"); });

  // Empirical tails never exceed any bound column by more than 4 SE.
  const std::vector<SampleModel> models = {
      IidModel{100, 0.5}, HeterogeneousModel{{0.2, 0.4, 0.6, 0.8}},
      UrnSpec{50, 20, 25}};
  for (const auto& model : models) {
    const SimulationSpec spec{model, config.trials, config.seed};
    const double p = spec.MeanParameter();
    std::vector<double> deviations;
    for (int j = 0; j <= 6; ++j) deviations.push_back((1.0 - p) * j / 6.0);
    for (const ScorecardRow& row :
         BoundScorecard(spec, deviations, config.threads)) {
      const double low = row.empirical - 4.0 * row.empirical_standard_error;
      for (double bound :
           {row.kl, row.multiplicative, row.simplified, row.steinke_ullman}) {
        report.ExpectSlack(bound - low, 0.0, [&] {
          return Format("%s: empirical %.6f - 4 SE exceeds a bound at t=%g",
                        ModelName(model), row.empirical, row.t);
        });
      }
      report.ExpectSlack(row.kl - row.exact, 1e-12, [&] {
        return Format("%s: exact tail exceeds KL bound at t=%g",
                      ModelName(model), row.t);
      });
    }
  }

  // Every urn position is red with probability P / N.
  const UrnSpec urn{20, 7, 8};
  const auto counts =
      UrnPositionCounts(urn, config.trials, config.seed, config.threads);
  const double target = urn.p();
  const double se = std::sqrt(target * (1.0 - target) /
                              static_cast<double>(config.trials));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double freq =
        static_cast<double>(counts[i]) / static_cast<double>(config.trials);
    report.ExpectSlack(4.0 * se - std::abs(freq - target), 0.0, [&] {
      return Format("urn position %zu red with frequency %.5f", i, freq);
    });
  }
  return report;
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "divergence",  "oracle-consistency", "domination",      "su-weak",
      "optimality",  "relaxations",        "hypergeometric",  "eq2",
      "weight-tail",      "encoding",           "selector",        "max-expectation",
      "negcorr",     "montecarlo"};
  return names;
}

bool SuiteNeedsSeed(const std::string& name) {
  return name == "optimality" || name == "weight-tail" || name == "selector" ||
         name == "montecarlo" || name == "all";
}

std::vector<SuiteReport> RunNamedSuite(const std::string& name,
                                       const SuiteOptions& options) {
  if (name == "all") {
    std::vector<SuiteReport> reports;
    for (const std::string& suite : SuiteNames()) {
      auto part = RunNamedSuite(suite, options);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    return reports;
  }
  const auto& names = SuiteNames();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw DomainError("unknown suite '" + name + "'");
  }
  if (SuiteNeedsSeed(name) && !options.seed) {
    throw DomainError("suite '" + name + "' is randomized and needs --seed");
  }
  const std::uint64_t seed = options.seed.value_or(0);
  auto capped = [&options](std::int64_t fallback, std::int64_t cap) {
    const std::int64_t n = options.max_n.value_or(fallback);
    if (n < 1) throw DomainError("--max-n must be >= 1");
    if (n > cap) {
      throw ResourceError("--max-n above the enumeration cap of " +
                          std::to_string(cap));
    }
    return n;
  };

  if (name == "divergence") return {RunDivergenceSuite()};
  if (name == "oracle-consistency") return {RunOracleConsistencySuite()};
  if (name == "domination" || name == "su-weak") {
    DominationConfig config;
    if (options.max_n) {
      std::erase_if(config.ns, [&](std::int64_t n) { return n > *options.max_n; });
    }
    return {name == "domination" ? RunDominationSuite(config)
                                 : RunSteinkeUllmanSuite(config)};
  }
  if (name == "optimality") {
    OptimalityConfig config;
    config.seed = seed;
    return {RunOptimalitySuite(config)};
  }
  if (name == "relaxations") return {RunRelaxationSuite()};
  if (name == "hypergeometric") return {RunHypergeometricSuite({})};
  if (name == "eq2") {
    return {RunEq2Suite(static_cast<int>(capped(kMaxDoubleEnumerationBits,
                                                kMaxDoubleEnumerationBits)))};
  }
  if (name == "weight-tail") {
    ValidWeightConfig config;
    config.seed = seed;
    config.max_n = static_cast<int>(
        capped(kMaxSingleEnumerationBits, kMaxSingleEnumerationBits));
    config.min_n = std::min(config.min_n, config.max_n);
    return {RunValidWeightSuite(config)};
  }
  if (name == "encoding") {
    return {RunEncodingSuite(static_cast<int>(
        capped(kMaxSingleEnumerationBits, kMaxSingleEnumerationBits)))};
  }
  if (name == "selector") {
    SelectorConfig config;
    config.seed = seed;
    return {RunSelectorSuite(config)};
  }
  if (name == "max-expectation") {
    MaxExpectationConfig config;
    config.max_n = capped(300, 100'000);
    return {RunMaxExpectationSuite(config)};
  }
  if (name == "negcorr") {
    NegativeCorrelationConfig config;
    config.max_draws = static_cast<int>(capped(8, kMaxJointBits));
    return {RunNegativeCorrelationSuite(config)};
  }
  MonteCarloConfig config;
  config.seed = seed;
  config.threads = options.threads;
  return {RunMonteCarloSuite(config)};
}

}  // namespace chernoff
