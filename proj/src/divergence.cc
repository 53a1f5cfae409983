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

#include "ldp_sampling/divergence.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"

namespace ldp_sampling {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPmfSumTolerance = 1e-12;

absl::Status ValidateGamma(double gamma) {
  if (!(gamma >= 1) || !std::isfinite(gamma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma must be a finite value >= 1, got %g", gamma));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<FDivergence> FDivergence::HockeyStick(double gamma) {
  if (absl::Status status = ValidateGamma(gamma); !status.ok()) return status;
  return FDivergence(Kind::kHockeyStick, gamma);
}

absl::StatusOr<FDivergence> FDivergence::FromName(std::string_view name) {
  if (name == "kl") return Kl();
  if (name == "tv") return TotalVariation();
  if (name == "hellinger" || name == "sqhellinger") return SquaredHellinger();
  if (name == "chi2") return ChiSquared();
  constexpr std::string_view kHockeyPrefix = "hockey:";
  if (name.substr(0, kHockeyPrefix.size()) == kHockeyPrefix) {
    const std::string value(name.substr(kHockeyPrefix.size()));
    double gamma;
    if (!absl::SimpleAtod(value, &gamma)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("bad hockey-stick gamma '%s'", value));
    }
    return HockeyStick(gamma);
  }
  return absl::InvalidArgumentError(
      absl::StrFormat("unknown divergence '%s'", std::string(name)));
}

std::string FDivergence::Name() const {
  switch (kind_) {
    case Kind::kKl:
      return "kl";
    case Kind::kTotalVariation:
      return "tv";
    case Kind::kSquaredHellinger:
      return "hellinger";
    case Kind::kChiSquared:
      return "chi2";
    case Kind::kHockeyStick:
      return absl::StrFormat("hockey:%g", gamma_);
  }
  return "";
}

double FDivergence::Generator(double t) const {
  if (t == 0) return AtZero();
  switch (kind_) {
    case Kind::kKl:
      return t * std::log(t);
    case Kind::kTotalVariation:
      return 0.5 * std::abs(t - 1);
    case Kind::kSquaredHellinger: {
      const double s = std::sqrt(t) - 1;
      return s * s;
    }
    case Kind::kChiSquared:
      return (t - 1) * (t - 1);
    case Kind::kHockeyStick:
      return t > gamma_ ? t - gamma_ : 0.0;
  }
  return 0;
}

double FDivergence::AtZero() const {
  switch (kind_) {
    case Kind::kKl:
    case Kind::kHockeyStick:
      return 0;
    case Kind::kTotalVariation:
      return 0.5;
    case Kind::kSquaredHellinger:
    case Kind::kChiSquared:
      return 1;
  }
  return 0;
}

double FDivergence::SlopeAtInfinity() const {
  switch (kind_) {
    case Kind::kKl:
    case Kind::kChiSquared:
      return kInf;
    case Kind::kTotalVariation:
      return 0.5;
    case Kind::kSquaredHellinger:
    case Kind::kHockeyStick:
      return 1;
  }
  return kInf;
}

double FDivergence::PointContribution(double p, double q) const {
  if (q > 0) return q * Generator(p / q);
  if (p > 0) return p * SlopeAtInfinity();
  return 0;
}

absl::StatusOr<double> EvalGenerator(const FDivergence& d, double t) {
  if (!(t >= 0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("generator argument must be >= 0, got %g", t));
  }
  return d.Generator(t);
}

absl::Status ValidatePmf(std::span<const double> p) {
  if (p.empty()) return absl::InvalidArgumentError("pmf is empty");
  double total = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0) || !std::isfinite(p[i])) {
      return absl::InvalidArgumentError(
          absl::StrFormat("pmf entry %d is not a finite nonnegative value: %g",
                          i, p[i]));
    }
    total += p[i];
  }
  if (std::abs(total - 1) > kPmfSumTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("pmf sums to %.17g, not 1", total));
  }
  return absl::OkStatus();
}

double DivergenceOfMasses(const FDivergence& d, std::span<const double> p,
                          std::span<const double> q) {
  double total = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    total += d.PointContribution(p[i], q[i]);
  }
  // Cancellation can leave tiny negative totals for identical inputs.
  return total < 0 ? 0.0 : total;
}

absl::StatusOr<double> DivergenceDiscrete(const FDivergence& d,
                                          std::span<const double> p,
                                          std::span<const double> q) {
  if (p.size() != q.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "support sizes differ: %d vs %d", p.size(), q.size()));
  }
  if (absl::Status s = ValidatePmf(p); !s.ok()) return s;
  if (absl::Status s = ValidatePmf(q); !s.ok()) return s;
  return DivergenceOfMasses(d, p, q);
}

absl::StatusOr<ContinuousDivergence> DivergenceContinuous(
    const FDivergence& d, DensityRef p, DensityRef q,
    const QuadratureConfig& config) {
  absl::StatusOr<QuadratureGrid> grid = QuadratureGrid::Create(config);
  if (!grid.ok()) return grid.status();
  ContinuousDivergence result;
  std::vector<double> point(grid->dim());
  double total = 0;
  for (size_t i = 0; i < grid->size(); ++i) {
    grid->Point(i, point);
    const double pv = p(point);
    const double qv = q(point);
    if (pv < 0 || qv < 0) {
      return absl::InvalidArgumentError("densities must be nonnegative");
    }
    if (qv == 0 && pv > 0 && std::isinf(d.SlopeAtInfinity())) {
      result.support_mismatch = true;
    }
    total += grid->Weight(i) * d.PointContribution(pv, qv);
  }
  result.value = result.support_mismatch ? kInf : std::max(total, 0.0);
  return result;
}

absl::StatusOr<double> EGamma(std::span<const double> p,
                              std::span<const double> q, double gamma) {
  absl::StatusOr<FDivergence> d = FDivergence::HockeyStick(gamma);
  if (!d.ok()) return d.status();
  return DivergenceDiscrete(*d, p, q);
}

absl::StatusOr<double> EGammaAbsoluteForm(std::span<const double> p,
                                          std::span<const double> q,
                                          double gamma) {
  if (absl::Status s = ValidateGamma(gamma); !s.ok()) return s;
  if (p.size() != q.size()) {
    return absl::InvalidArgumentError("support sizes differ");
  }
  if (absl::Status s = ValidatePmf(p); !s.ok()) return s;
  if (absl::Status s = ValidatePmf(q); !s.ok()) return s;
  double total = 0;
  for (size_t i = 0; i < p.size(); ++i) total += std::abs(p[i] - gamma * q[i]);
  return std::max(0.0, 0.5 * total - 0.5 * (gamma - 1));
}

absl::StatusOr<double> EGammaContinuous(DensityRef p, DensityRef q,
                                        double gamma,
                                        const QuadratureConfig& config) {
  absl::StatusOr<FDivergence> d = FDivergence::HockeyStick(gamma);
  if (!d.ok()) return d.status();
  absl::StatusOr<ContinuousDivergence> result =
      DivergenceContinuous(*d, p, q, config);
  if (!result.ok()) return result.status();
  return result->value;
}

absl::StatusOr<double> EGammaAbsoluteFormContinuous(
    DensityRef p, DensityRef q, double gamma, const QuadratureConfig& config) {
  if (absl::Status s = ValidateGamma(gamma); !s.ok()) return s;
  absl::StatusOr<QuadratureGrid> grid = QuadratureGrid::Create(config);
  if (!grid.ok()) return grid.status();
  std::vector<double> point(grid->dim());
  double abs_total = 0;
  double p_mass = 0;
  double q_mass = 0;
  for (size_t i = 0; i < grid->size(); ++i) {
    grid->Point(i, point);
    const double pv = p(point);
    const double qv = q(point);
    const double w = grid->Weight(i);
    abs_total += w * std::abs(pv - gamma * qv);
    p_mass += w * pv;
    q_mass += w * qv;
  }
  // Uses the grid masses in place of 1 so both forms see the same measure.
  return std::max(0.0, 0.5 * abs_total - 0.5 * (gamma * q_mass - p_mass));
}

}  // namespace ldp_sampling
