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

#ifndef LDP_SAMPLING_DIVERGENCE_H_
#define LDP_SAMPLING_DIVERGENCE_H_

#include <span>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "ldp_sampling/quadrature.h"

namespace ldp_sampling {

// An f-divergence generator: a convex f on (0, inf) with f(1) = 0, together
// with the two limits needed for the extended-value conventions
//   0 * f(0/0) = 0,   0 * f(a/0) = a * lim_{u->inf} f(u)/u.
//
//   KL                 f(t) = t log t           f(0) = 0    slope = inf
//   TotalVariation     f(t) = |t - 1| / 2       f(0) = 1/2  slope = 1/2
//   SquaredHellinger   f(t) = (sqrt(t) - 1)^2   f(0) = 1    slope = 1
//   ChiSquared         f(t) = (t - 1)^2         f(0) = 1    slope = inf
//   HockeyStick(g)     f(t) = max(t - g, 0)     f(0) = 0    slope = 1
class FDivergence {
 public:
  enum class Kind {
    kKl,
    kTotalVariation,
    kSquaredHellinger,
    kChiSquared,
    kHockeyStick,
  };

  static FDivergence Kl() { return FDivergence(Kind::kKl, 0); }
  static FDivergence TotalVariation() {
    return FDivergence(Kind::kTotalVariation, 0);
  }
  static FDivergence SquaredHellinger() {
    return FDivergence(Kind::kSquaredHellinger, 0);
  }
  static FDivergence ChiSquared() { return FDivergence(Kind::kChiSquared, 0); }
  // gamma must be >= 1.
  static absl::StatusOr<FDivergence> HockeyStick(double gamma);

  // Parses "kl", "tv", "hellinger", "chi2" or "hockey:<gamma>".
  static absl::StatusOr<FDivergence> FromName(std::string_view name);

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  // Short name, inverse of FromName.
  std::string Name() const;

  // f(t) for t >= 0, using the t -> 0+ limit at t = 0. No domain check.
  double Generator(double t) const;
  double AtZero() const;
  // lim_{u->inf} f(u)/u; may be +inf.
  double SlopeAtInfinity() const;

  // q * f(p / q) with the extended-value conventions above, for p, q >= 0.
  double PointContribution(double p, double q) const;

  friend bool operator==(const FDivergence&, const FDivergence&) = default;

 private:
  FDivergence(Kind kind, double gamma) : kind_(kind), gamma_(gamma) {}

  Kind kind_;
  double gamma_;
};

// f(t); negative t is a domain error.
absl::StatusOr<double> EvalGenerator(const FDivergence& d, double t);

// sum_i q_i f(p_i / q_i). Both inputs must be pmfs of the same size
// (nonnegative, summing to 1 within 1e-12). May return +inf.
absl::StatusOr<double> DivergenceDiscrete(const FDivergence& d,
                                          std::span<const double> p,
                                          std::span<const double> q);

// sum_i q_i f(p_i / q_i) without pmf validation; used on grid-discretized
// measures where the caller owns normalization.
double DivergenceOfMasses(const FDivergence& d, std::span<const double> p,
                          std::span<const double> q);

struct ContinuousDivergence {
  double value = 0;
  // Set when q vanished at a node where p > 0 and the generator has infinite
  // slope; value is +inf in that case.
  bool support_mismatch = false;
};

// Quadrature estimate of the integral of q f(p/q) on the configured grid.
absl::StatusOr<ContinuousDivergence> DivergenceContinuous(
    const FDivergence& d, DensityRef p, DensityRef q,
    const QuadratureConfig& config);

// E_gamma(P || Q) = E_Q[max(dP/dQ - gamma, 0)] for pmfs; gamma >= 1.
absl::StatusOr<double> EGamma(std::span<const double> p,
                              std::span<const double> q, double gamma);
// The same quantity as (1/2) sum |p - gamma q| - (gamma - 1) / 2.
absl::StatusOr<double> EGammaAbsoluteForm(std::span<const double> p,
                                          std::span<const double> q,
                                          double gamma);
// Continuous counterparts on a quadrature grid.
absl::StatusOr<double> EGammaContinuous(DensityRef p, DensityRef q,
                                        double gamma,
                                        const QuadratureConfig& config);
absl::StatusOr<double> EGammaAbsoluteFormContinuous(
    DensityRef p, DensityRef q, double gamma, const QuadratureConfig& config);

// Checks that `p` is a pmf: size >= 1, finite nonnegative entries, sum 1
// within 1e-12.
absl::Status ValidatePmf(std::span<const double> p);

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_DIVERGENCE_H_
