//
// Copyright 2026 The LDP Sampling Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "ldp_sampling/risk.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "ldp_sampling/numerics.h"

namespace ldp_sampling {
namespace {

constexpr int kBetaGrid = 512;
constexpr double kBetaTolerance = 1e-13;
constexpr double kIntegralTolerance = 1e-9;
constexpr double kBoundaryClamp = 1e-9;
constexpr double kTrivialityTolerance = 1e-12;

double Multiplicity(double c1, double c2) { return (c2 - c1) / (1 - c1); }

RiskReport TrivialReport(double c1, double c2, const TradeoffFunction& g,
                         const FDivergence& f) {
  RiskReport report;
  report.trivial = true;
  report.c1 = c1;
  report.c2 = c2;
  report.privacy = g.DebugString();
  report.divergence = f.Name();
  report.sampler = "identity";
  return report;
}

}  // namespace

absl::Status ValidateUniverseBounds(double c1, double c2,
                                    bool require_integral) {
  if (!(c1 >= 0 && c1 < 1 && c2 > 1) || !std::isfinite(c2)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "universe bounds must satisfy 0 <= c1 < 1 < c2, got c1=%g c2=%g", c1,
        c2));
  }
  if (require_integral) {
    const double m = Multiplicity(c1, c2);
    if (std::abs(m - std::round(m)) > kIntegralTolerance) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "(c2 - c1) / (1 - c1) = %.12g is not an integer; widen the bounds",
          m));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<WidenedBounds> WidenToIntegral(double c1, double c2) {
  if (absl::Status s = ValidateUniverseBounds(c1, c2, false); !s.ok()) {
    return s;
  }
  const double m = Multiplicity(c1, c2);
  if (std::abs(m - std::round(m)) <= kIntegralTolerance) {
    return WidenedBounds{c1, c2, false};
  }
  const double floor_m = std::floor(m);
  if (floor_m >= c2) {
    return WidenedBounds{(floor_m - c2) / (floor_m - 1), c2, true};
  }
  return WidenedBounds{0.0, std::ceil(c2), true};
}

double BetaMax(double c2, const TradeoffFunction& g) {
  double beta_max = std::max(40.0, 4 * std::log(c2));
  if (g.kind() == TradeoffFunction::Kind::kGaussian) {
    beta_max = std::max(beta_max, 4 * g.nu() * g.nu() + 20);
  }
  return beta_max;
}

double LambdaObjective(double c1, double c2, const TradeoffFunction& g,
                       double beta) {
  const double e = std::exp(beta);
  const double k = Multiplicity(c1, c2);
  return (e + k * (1 + g.ConjugateAtNegExp(beta)) - 1) /
         ((1 - c1) * e + c2 - 1);
}

absl::StatusOr<bool> NonTrivial(double c1, double c2,
                                const TradeoffFunction& g) {
  if (absl::Status s = ValidateUniverseBounds(c1, c2, false); !s.ok()) {
    return s;
  }
  if (c1 == 0) return true;
  auto gap = [&](double beta) {
    return (1 + g.ConjugateAtNegExp(beta)) -
           (c2 - c1 * std::exp(beta)) * (1 - c1) / (c2 - c1);
  };
  absl::StatusOr<ScalarMinimum> best =
      MinimizeScalar(gap, 0, BetaMax(c2, g), kBetaGrid, kBetaTolerance);
  if (!best.ok()) return best.status();
  return best->value <= kTrivialityTolerance;
}

absl::StatusOr<LambdaStar> LambdaStarFunctional(double c1, double c2,
                                                const TradeoffFunction& g) {
  absl::StatusOr<bool> non_trivial = NonTrivial(c1, c2, g);
  if (!non_trivial.ok()) return non_trivial.status();
  if (!*non_trivial) return LambdaStar{1, true};
  absl::StatusOr<ScalarMinimum> best = MinimizeScalar(
      [&](double beta) { return LambdaObjective(c1, c2, g, beta); }, 0,
      BetaMax(c2, g), kBetaGrid, kBetaTolerance);
  if (!best.ok()) return best.status();
  double value = best->value;
  if (value > 1 && value <= 1 + kBoundaryClamp) value = 1;
  if (value < 0 && value >= -kBoundaryClamp) value = 0;
  return LambdaStar{value, false};
}

absl::StatusOr<LambdaStar> LambdaStarPure(double c1, double c2,
                                          double epsilon) {
  return LambdaStarApprox(c1, c2, epsilon, 0);
}

absl::StatusOr<LambdaStar> LambdaStarApprox(double c1, double c2,
                                            double epsilon, double delta) {
  if (absl::Status s = ValidateUniverseBounds(c1, c2, false); !s.ok()) {
    return s;
  }
  absl::StatusOr<TradeoffFunction> g =
      TradeoffFunction::Approximate(epsilon, delta);
  if (!g.ok()) return g.status();
  const double e = std::exp(epsilon);
  const double k = Multiplicity(c1, c2);
  const double boundary = (c2 - c1 * e) * (1 - c1) / (c2 - c1);
  if (delta > boundary * (1 + kTrivialityTolerance) + kTrivialityTolerance) {
    return LambdaStar{1, true};
  }
  const double value = (e + k * delta - 1) / ((1 - c1) * e + c2 - 1);
  return LambdaStar{std::clamp(value, 0.0, 1.0), false};
}

absl::StatusOr<LambdaStar> LambdaStarFor(double c1, double c2,
                                         const TradeoffFunction& g) {
  switch (g.kind()) {
    case TradeoffFunction::Kind::kPure:
      return LambdaStarPure(c1, c2, g.epsilon());
    case TradeoffFunction::Kind::kApproximate:
      return LambdaStarApprox(c1, c2, g.epsilon(), g.delta());
    case TradeoffFunction::Kind::kGaussian:
      return LambdaStarFunctional(c1, c2, g);
  }
  return absl::InternalError("unknown trade-off kind");
}

double RiskFromRatios(double r1, double r2, const FDivergence& f) {
  if (!(r2 - r1 > 0)) return 0;
  const double risk = (1 - r1) / (r2 - r1) * f.Generator(r2) +
                      (r2 - 1) / (r2 - r1) * f.Generator(r1);
  return std::max(risk, 0.0);
}

RiskReport RiskFromLambda(double c1, double c2, double lambda,
                          const FDivergence& f) {
  RiskReport report;
  report.c1 = c1;
  report.c2 = c2;
  report.divergence = f.Name();
  report.sampler = "linear";
  report.lambda_star = lambda;
  if (lambda >= 1) return report;
  report.r1 = c1 / (1 - (1 - c1) * lambda);
  report.r2 = c2 / ((c2 - 1) * lambda + 1);
  report.risk = RiskFromRatios(report.r1, report.r2, f);
  return report;
}

absl::StatusOr<RiskReport> MinimaxRisk(double c1, double c2,
                                       const TradeoffFunction& g,
                                       const FDivergence& f) {
  if (absl::Status s = ValidateUniverseBounds(c1, c2); !s.ok()) return s;
  absl::StatusOr<LambdaStar> lambda = LambdaStarFor(c1, c2, g);
  if (!lambda.ok()) return lambda.status();
  if (lambda->trivial) return TrivialReport(c1, c2, g, f);
  RiskReport report = RiskFromLambda(c1, c2, lambda->value, f);
  report.privacy = g.DebugString();
  return report;
}

absl::StatusOr<RiskReport> LocalRiskPure(double gamma, double epsilon,
                                         const FDivergence& f) {
  if (!(gamma > 1) || !std::isfinite(gamma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma must be finite and > 1, got %g", gamma));
  }
  absl::StatusOr<TradeoffFunction> g = TradeoffFunction::Pure(epsilon);
  if (!g.ok()) return g.status();
  if (epsilon >= 2 * std::log(gamma)) {
    RiskReport report = TrivialReport(1 / gamma, gamma, *g, f);
    return report;
  }
  const double e = std::exp(epsilon);
  RiskReport report;
  report.c1 = 1 / gamma;
  report.c2 = gamma;
  report.privacy = g->DebugString();
  report.divergence = f.Name();
  report.sampler = "clip";
  report.lambda_star = std::numeric_limits<double>::quiet_NaN();
  report.r1 = (e + gamma) / (gamma * (gamma + 1));
  report.r2 = gamma * (e + gamma) / (e * (gamma + 1));
  report.risk = RiskFromRatios(report.r1, report.r2, f);
  return report;
}

absl::StatusOr<RiskReport> LocalRiskFunctional(double gamma,
                                               const TradeoffFunction& g,
                                               const FDivergence& f) {
  if (!(gamma > 1) || !std::isfinite(gamma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma must be finite and > 1, got %g", gamma));
  }
  return MinimaxRisk(1 / gamma, gamma, g, f);
}

}  // namespace ldp_sampling
