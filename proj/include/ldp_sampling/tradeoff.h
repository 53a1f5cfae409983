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

#ifndef LDP_SAMPLING_TRADEOFF_H_
#define LDP_SAMPLING_TRADEOFF_H_

#include <string>

#include "absl/status/statusor.h"

namespace ldp_sampling {

// A trade-off function g: [0, 1] -> [0, 1] describing a local privacy
// guarantee.
//
//   Pure(eps)            g(u) = max{0, 1 - e^eps u, e^-eps (1 - u)}
//   Approximate(eps, d)  g(u) = max{0, 1 - d - e^eps u, e^-eps (1 - d - u)}
//   Gaussian(nu)         g(u) = Phi(Phi^-1(1 - u) - nu)
class TradeoffFunction {
 public:
  enum class Kind { kPure, kApproximate, kGaussian };

  // eps >= 0.
  static absl::StatusOr<TradeoffFunction> Pure(double epsilon);
  // eps >= 0, delta in [0, 1].
  static absl::StatusOr<TradeoffFunction> Approximate(double epsilon,
                                                      double delta);
  // nu > 0.
  static absl::StatusOr<TradeoffFunction> Gaussian(double nu);

  Kind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  double nu() const { return nu_; }

  // g(u) for u in [0, 1].
  absl::StatusOr<double> Eval(double u) const;

  // g*(-e^beta) = sup_{t in [0,1]} (-e^beta t - g(t)) for beta >= 0. The
  // result lies in [-1, 0]. Negative beta is clamped to 0.
  double ConjugateAtNegExp(double beta) const;

  std::string DebugString() const;

 private:
  TradeoffFunction(Kind kind, double epsilon, double delta, double nu)
      : kind_(kind), epsilon_(epsilon), delta_(delta), nu_(nu) {}

  Kind kind_;
  double epsilon_;
  double delta_;
  double nu_;
};

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_TRADEOFF_H_
