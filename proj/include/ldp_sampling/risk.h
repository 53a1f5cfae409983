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

#ifndef LDP_SAMPLING_RISK_H_
#define LDP_SAMPLING_RISK_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldp_sampling/divergence.h"
#include "ldp_sampling/tradeoff.h"

namespace ldp_sampling {

// Worst-case f-divergence of an optimal sampler over a band universe.
struct RiskReport {
  double lambda_star = 1;
  double r1 = 1;
  double r2 = 1;
  double risk = 0;
  // Set when the identity map is already private on the class.
  bool trivial = false;

  // Input echo.
  double c1 = 0;
  double c2 = 0;
  std::string privacy;
  std::string divergence;
  // "linear", "clip" or "identity".
  std::string sampler;
};

struct LambdaStar {
  double value = 1;
  bool trivial = false;
};

// Validates 0 <= c1 < 1 < c2 and, when `require_integral`, that
// (c2 - c1) / (1 - c1) is an integer within 1e-9.
absl::Status ValidateUniverseBounds(double c1, double c2,
                                    bool require_integral = true);

// Result of shrinking (c1, c2) outward until (c2 - c1) / (1 - c1) is an
// integer: c1 is lowered while the multiplicity stays >= c2, otherwise c1 = 0
// and c2 is rounded up.
struct WidenedBounds {
  double c1 = 0;
  double c2 = 0;
  bool changed = false;
};
absl::StatusOr<WidenedBounds> WidenToIntegral(double c1, double c2);

// Upper end of the beta search: max(40, 4 ln c2, 4 nu^2 + 20).
double BetaMax(double c2, const TradeoffFunction& g);

// (e^b + K (1 + g*(-e^b)) - 1) / ((1 - c1) e^b + c2 - 1), K = (c2-c1)/(1-c1).
double LambdaObjective(double c1, double c2, const TradeoffFunction& g,
                       double beta);

// Whether some beta >= 0 has 1 + g*(-e^b) <= (c2 - c1 e^b)(1 - c1)/(c2 - c1).
absl::StatusOr<bool> NonTrivial(double c1, double c2,
                                const TradeoffFunction& g);

// inf_{beta >= 0} LambdaObjective by grid scan and golden-section refinement,
// for any privacy kind.
absl::StatusOr<LambdaStar> LambdaStarFunctional(double c1, double c2,
                                                const TradeoffFunction& g);
// Closed forms.
absl::StatusOr<LambdaStar> LambdaStarPure(double c1, double c2,
                                          double epsilon);
absl::StatusOr<LambdaStar> LambdaStarApprox(double c1, double c2,
                                            double epsilon, double delta);
// Closed form when one exists, numeric infimum otherwise.
absl::StatusOr<LambdaStar> LambdaStarFor(double c1, double c2,
                                         const TradeoffFunction& g);

// (1 - r1)/(r2 - r1) f(r2) + (r2 - 1)/(r2 - r1) f(r1); zero when r1 = r2.
double RiskFromRatios(double r1, double r2, const FDivergence& f);

// Report for the linear sampler with weight `lambda` on (c1, c2).
RiskReport RiskFromLambda(double c1, double c2, double lambda,
                          const FDivergence& f);

// Global minimax risk over the universe (c1, c2, h).
absl::StatusOr<RiskReport> MinimaxRisk(double c1, double c2,
                                       const TradeoffFunction& g,
                                       const FDivergence& f);

// Risk of the non-linear pure sampler on N_gamma(P0). Trivial when
// epsilon >= 2 ln gamma.
absl::StatusOr<RiskReport> LocalRiskPure(double gamma, double epsilon,
                                         const FDivergence& f);

// Local minimax risk of the linear sampler on N_gamma(P0), i.e. MinimaxRisk
// with (1/gamma, gamma).
absl::StatusOr<RiskReport> LocalRiskFunctional(double gamma,
                                               const TradeoffFunction& g,
                                               const FDivergence& f);

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_RISK_H_
