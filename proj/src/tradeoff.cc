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

#include "ldp_sampling/tradeoff.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "ldp_sampling/numerics.h"

namespace ldp_sampling {

absl::StatusOr<TradeoffFunction> TradeoffFunction::Pure(double epsilon) {
  if (!(epsilon >= 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be finite and >= 0, got %g", epsilon));
  }
  return TradeoffFunction(Kind::kPure, epsilon, 0, 0);
}

absl::StatusOr<TradeoffFunction> TradeoffFunction::Approximate(double epsilon,
                                                               double delta) {
  if (!(epsilon >= 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be finite and >= 0, got %g", epsilon));
  }
  if (!(delta >= 0 && delta <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("delta must be in [0, 1], got %g", delta));
  }
  return TradeoffFunction(Kind::kApproximate, epsilon, delta, 0);
}

absl::StatusOr<TradeoffFunction> TradeoffFunction::Gaussian(double nu) {
  if (!(nu > 0) || !std::isfinite(nu)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("nu must be finite and > 0, got %g", nu));
  }
  return TradeoffFunction(Kind::kGaussian, 0, 0, nu);
}

absl::StatusOr<double> TradeoffFunction::Eval(double u) const {
  if (!(u >= 0 && u <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("trade-off argument must be in [0, 1], got %g", u));
  }
  if (kind_ == Kind::kGaussian) {
    if (u == 0) return 1.0;
    if (u == 1) return 0.0;
    return StandardNormalCdf(-StandardNormalQuantile(u) - nu_);
  }
  const double one_minus_delta = 1 - delta_;
  const double e = std::exp(epsilon_);
  return std::max({0.0, one_minus_delta - e * u,
                   (one_minus_delta - u) / e});
}

double TradeoffFunction::ConjugateAtNegExp(double beta) const {
  beta = std::max(beta, 0.0);
  if (kind_ == Kind::kGaussian) {
    const double shift = beta / nu_;
    const double value = -std::exp(beta) * StandardNormalCdf(-nu_ / 2 - shift) -
                         StandardNormalCdf(-nu_ / 2 + shift);
    return std::clamp(value, -1.0, 0.0);
  }
  const double one_minus_delta = 1 - delta_;
  if (beta > epsilon_) return -one_minus_delta;
  const double y = -std::exp(beta);
  return one_minus_delta * (y - 1) / (std::exp(epsilon_) + 1);
}

std::string TradeoffFunction::DebugString() const {
  switch (kind_) {
    case Kind::kPure:
      return absl::StrFormat("pure(eps=%g)", epsilon_);
    case Kind::kApproximate:
      return absl::StrFormat("approx(eps=%g, delta=%g)", epsilon_, delta_);
    case Kind::kGaussian:
      return absl::StrFormat("gaussian(nu=%g)", nu_);
  }
  return "";
}

}  // namespace ldp_sampling
