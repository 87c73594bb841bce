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

#include "chernoff/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "chernoff/divergence.h"
#include "chernoff/errors.h"
#include "chernoff/log_math.h"

namespace chernoff {
namespace {

// Slack on the admissible-t boundary, so that t = 1 - p computed in floating
// point is accepted.
constexpr double kBoundarySlack = 1e-12;

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void ValidateTailQuery(const TailQuery& q) {
  if (q.n < 1) throw DomainError("n must be >= 1, got " + std::to_string(q.n));
  if (!(q.p >= 0.0 && q.p <= 1.0)) {
    throw DomainError("p must lie in [0, 1], got " + Num(q.p));
  }
  if (!(q.t >= 0.0) || !std::isfinite(q.t)) {
    throw DomainError("t must be finite and >= 0, got " + Num(q.t));
  }
  switch (q.direction) {
    case Direction::kUpper:
      if (q.t > 1.0 - q.p + kBoundarySlack) {
        throw DomainError("upper tail needs t in [0, 1 - p]; t = " + Num(q.t) +
                          ", p = " + Num(q.p));
      }
      break;
    case Direction::kLower:
      if (q.t > q.p + kBoundarySlack) {
        throw DomainError("lower tail needs t in [0, p]; t = " + Num(q.t) +
                          ", p = " + Num(q.p));
      }
      break;
    case Direction::kTwoSided:
      throw UnsupportedError(
          "no two-sided KL bound; use the simplified two-sided form");
  }
}

// -n D(p + t || p), assuming a validated upper-tail query.
double UpperKlLog(std::int64_t n, double p, double t) {
  const double a = std::min(1.0, p + t);
  const double d = KlBinary(a, p);
  if (d == kInf) return -kInf;
  return -static_cast<double>(n) * d;
}

std::vector<std::pair<std::string, double>> TailInputs(const TailQuery& q) {
  return {{"n", static_cast<double>(q.n)}, {"p", q.p}, {"t", q.t}};
}

void ValidateMultiplicative(const MultiplicativeQuery& q) {
  if (!(q.mu >= 0.0) || !std::isfinite(q.mu)) {
    throw DomainError("mu must be finite and >= 0, got " + Num(q.mu));
  }
  if (!(q.delta >= 0.0) || !std::isfinite(q.delta)) {
    throw DomainError("delta must be finite and >= 0, got " + Num(q.delta));
  }
}

std::vector<std::pair<std::string, double>> MultiplicativeInputs(
    const MultiplicativeQuery& q) {
  std::vector<std::pair<std::string, double>> inputs = {{"mu", q.mu},
                                                        {"delta", q.delta}};
  if (q.n) inputs.emplace_back("n", static_cast<double>(*q.n));
  return inputs;
}

// ln(p e^l + 1 - p) for l > 0.
double LogMomentGenerating(double p, double lambda) {
  if (p == 0.0) return 0.0;
  if (lambda > 1.0) {
    return lambda + std::log(p + (1.0 - p) * std::exp(-lambda));
  }
  return std::log1p(p * std::expm1(lambda));
}

}  // namespace

const char* DirectionName(Direction direction) {
  switch (direction) {
    case Direction::kUpper:
      return "upper";
    case Direction::kLower:
      return "lower";
    case Direction::kTwoSided:
      return "two_sided";
  }
  return "?";
}

const char* LambdaMethodName(LambdaMethod method) {
  return method == LambdaMethod::kMoment ? "moment" : "ik";
}

BoundResult MakeBoundResult(
    std::string name, double log_value,
    std::vector<std::pair<std::string, double>> inputs) {
  BoundResult r;
  r.name = std::move(name);
  r.log_value = log_value == 0.0 ? 0.0 : log_value;  // no -0
  r.value = std::exp(log_value);
  r.vacuous = log_value >= 0.0;
  r.inputs = std::move(inputs);
  return r;
}

BoundResult KlTailBound(const TailQuery& query) {
  ValidateTailQuery(query);
  if (query.direction == Direction::kUpper) {
    return MakeBoundResult("kl-upper", UpperKlLog(query.n, query.p, query.t),
                           TailInputs(query));
  }
  // X <= (p - t) n  <=>  n - X >= (1 - p + t) n, and n - X ~ B(n, 1 - p).
  return MakeBoundResult("kl-lower",
                         UpperKlLog(query.n, 1.0 - query.p, query.t),
                         TailInputs(query));
}

BoundResult HypergeometricBound(std::int64_t population, std::int64_t red,
                                std::int64_t draws, double t) {
  if (population < 1 || red < 0 || red > population || draws < 1 ||
      draws > population) {
    throw DomainError("urn needs population >= 1, 0 <= red <= population, "
                      "1 <= draws <= population");
  }
  const double p = static_cast<double>(red) / static_cast<double>(population);
  BoundResult r = KlTailBound({draws, p, t, Direction::kUpper});
  r.name = "hypergeometric";
  r.inputs = {{"population", static_cast<double>(population)},
              {"red", static_cast<double>(red)},
              {"draws", static_cast<double>(draws)},
              {"p", p},
              {"t", t}};
  return r;
}

BoundResult ParametricBound(const TailQuery& query, double lambda,
                            LambdaMethod method) {
  if (query.direction != Direction::kUpper) {
    throw UnsupportedError("parametric bounds cover the upper tail only");
  }
  ValidateTailQuery(query);
  const double n = static_cast<double>(query.n);
  const double p = query.p;
  const double threshold = std::min(1.0, p + query.t);
  auto inputs = TailInputs(query);
  inputs.emplace_back("lambda", lambda);

  if (method == LambdaMethod::kMoment) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
      throw DomainError("moment method needs lambda > 0, got " + Num(lambda));
    }
    const double log_value =
        n * (LogMomentGenerating(p, lambda) - lambda * threshold);
    return MakeBoundResult("moment", log_value, std::move(inputs));
  }

  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw DomainError("ik method needs lambda in (0, 1], got " + Num(lambda));
  }
  const double failures = std::max(0.0, 1.0 - threshold);
  const double numerator = std::log1p(-lambda * (1.0 - p));
  // (1 - p - t) ln(1 - lambda), with 0 * ln(0) = 0.
  const double denominator =
      failures == 0.0 ? 0.0 : failures * std::log1p(-lambda);
  const double log_value = n * (numerator - denominator);
  if (std::isnan(log_value)) {
    throw DomainError("ik bound is 0/0 at lambda = 1 with p = 0");
  }
  return MakeBoundResult("ik", log_value, std::move(inputs));
}

double OptimalLambda(double p, double t, LambdaMethod method) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("optimal lambda needs 0 < p < 1, got " + Num(p));
  }
  if (!(t > 0.0)) {
    throw DomainError("optimal lambda needs t > 0, got " + Num(t));
  }
  if (method == LambdaMethod::kMoment) {
    const double failures = 1.0 - p - t;
    if (!(failures > 0.0)) {
      throw DomainError("moment optimum is singular at t >= 1 - p");
    }
    return std::log((1.0 - p) * (p + t)) - std::log(p * failures);
  }
  if (t > 1.0 - p + kBoundarySlack) {
    throw DomainError("ik optimum needs t <= 1 - p");
  }
  return std::min(1.0, t / ((1.0 - p) * (p + t)));
}

BoundResult MultiplicativeBound(const MultiplicativeQuery& query) {
  ValidateMultiplicative(query);
  const double mu = query.mu;
  const double d = query.delta;
  switch (query.direction) {
    case Direction::kUpper: {
      const double exponent = d - (1.0 + d) * std::log1p(d);
      return MakeBoundResult("mult-upper", mu == 0.0 ? 0.0 : mu * exponent,
                             MultiplicativeInputs(query));
    }
    case Direction::kLower: {
      if (d > 1.0) {
        throw DomainError("multiplicative lower tail needs delta <= 1, got " +
                          Num(d));
      }
      // (1 - d) ln(1 - d) -> 0 as d -> 1.
      const double entropy_term = d == 1.0 ? 0.0 : (1.0 - d) * std::log1p(-d);
      const double exponent = -d - entropy_term;
      return MakeBoundResult("mult-lower", mu == 0.0 ? 0.0 : mu * exponent,
                             MultiplicativeInputs(query));
    }
    case Direction::kTwoSided:
      break;
  }
  throw UnsupportedError(
      "multiplicative bound has no two-sided form; use the simplified bound");
}

BoundResult SimplifiedBound(const MultiplicativeQuery& query) {
  ValidateMultiplicative(query);
  const double mu = query.mu;
  const double d = query.delta;
  if (query.direction == Direction::kLower) {
    if (!(d > 0.0 && d < 1.0)) {
      throw DomainError("simplified lower tail needs delta in (0, 1), got " +
                        Num(d));
    }
    return MakeBoundResult("simple-lower", -d * d * mu / 2.0,
                           MultiplicativeInputs(query));
  }
  const double exponent = -std::min(d * d, d) * mu / 4.0;
  BoundResult r =
      query.direction == Direction::kUpper
          ? MakeBoundResult("simple-upper", exponent,
                            MultiplicativeInputs(query))
          : MakeBoundResult("two-sided", std::numbers::ln2 + exponent,
                            MultiplicativeInputs(query));
  if (query.n && (1.0 + d) * mu > static_cast<double>(*query.n)) {
    r.note = "threshold (1 + delta) mu exceeds n; the upper event is empty";
  }
  return r;
}

BoundResult AbsoluteThresholdBound(double mu, double t_abs) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw DomainError("mu must be finite and >= 0, got " + Num(mu));
  }
  if (!std::isfinite(t_abs)) throw DomainError("threshold must be finite");
  if (t_abs < 2.0 * std::numbers::e * mu) {
    throw DomainError("threshold bound needs t >= 2 e mu = " +
                      Num(2.0 * std::numbers::e * mu) + ", got " + Num(t_abs));
  }
  return MakeBoundResult("threshold", -t_abs * std::numbers::ln2,
                         {{"mu", mu}, {"t", t_abs}});
}

BoundResult SteinkeUllmanBound(std::int64_t n, double t) {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("t must lie in [0, 1], got " + Num(t));
  }
  const double nd = static_cast<double>(n);
  BoundResult r = MakeBoundResult("su-weak", 1.0 - t * t * nd / 64.0,
                                  {{"n", nd}, {"t", t}});
  if (t < 8.0 / std::sqrt(nd)) {
    r.note = "t < 8 / sqrt(n); the bound is vacuous";
  }
  return r;
}

double MeanParameter(std::span<const double> p_list) {
  if (p_list.empty()) throw DomainError("mean parameter of an empty list");
  double total = 0.0;
  for (double p : p_list) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("success probabilities must lie in [0, 1], got " +
                        Num(p));
    }
    total += p;
  }
  return std::clamp(total / static_cast<double>(p_list.size()), 0.0, 1.0);
}

std::int64_t UpperThreshold(std::int64_t n, double p, double t) {
  const double x = (p + t) * static_cast<double>(n);
  const double k = std::ceil(x - 1e-12 * std::max(1.0, std::abs(x)));
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(k));
}

std::int64_t LowerThreshold(std::int64_t n, double p, double t) {
  const double x = (p - t) * static_cast<double>(n);
  const double k = std::floor(x + 1e-12 * std::max(1.0, std::abs(x)));
  return std::min<std::int64_t>(n, static_cast<std::int64_t>(k));
}

}  // namespace chernoff
