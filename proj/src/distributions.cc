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

#include "ldp_sampling/distributions.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/strings/str_format.h"
#include "ldp_sampling/divergence.h"

namespace ldp_sampling {
namespace {

constexpr int kMaxBallRejections = 1 << 20;

absl::Status ValidateBounds(double c1, double c2) {
  if (!(c1 >= 0 && c1 < 1 && c2 > 1) || !std::isfinite(c2)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "universe bounds must satisfy 0 <= c1 < 1 < c2, got c1=%g c2=%g", c1,
        c2));
  }
  return absl::OkStatus();
}

double ReferenceMass(const Reference& ref) {
  if (const auto* pmf = std::get_if<DiscretePmf>(&ref)) {
    return std::accumulate(pmf->probs().begin(), pmf->probs().end(), 0.0);
  }
  return 1;
}

}  // namespace

absl::StatusOr<DiscretePmf> DiscretePmf::Create(std::vector<double> probs) {
  if (probs.size() < 2) {
    return absl::InvalidArgumentError(
        absl::StrFormat("pmf needs k >= 2 entries, got %d", probs.size()));
  }
  if (absl::Status s = ValidatePmf(probs); !s.ok()) return s;
  return DiscretePmf(std::move(probs));
}

DiscretePmf DiscretePmf::Uniform(int k) {
  return DiscretePmf(std::vector<double>(std::max(k, 2), 1.0 / std::max(k, 2)));
}

absl::StatusOr<LaplaceMixture> LaplaceMixture::Create(
    int dim, double scale, std::vector<double> weights,
    std::vector<std::vector<double>> means) {
  if (dim < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension must be >= 1, got %d", dim));
  }
  if (!(scale > 0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("scale must be finite and > 0, got %g", scale));
  }
  if (weights.empty() || weights.size() != means.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need one mean per weight and at least one component (%d weights, "
        "%d means)",
        weights.size(), means.size()));
  }
  if (absl::Status s = ValidatePmf(weights); !s.ok()) return s;
  for (const std::vector<double>& m : means) {
    if (static_cast<int>(m.size()) != dim) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "mean has dimension %d, expected %d", m.size(), dim));
    }
    for (double v : m) {
      if (!std::isfinite(v)) {
        return absl::InvalidArgumentError("mean coordinates must be finite");
      }
    }
  }
  LaplaceMixture mixture;
  mixture.dim_ = dim;
  mixture.scale_ = scale;
  mixture.log_norm_ = -dim * std::log(2 * scale);
  mixture.weights_ = std::move(weights);
  mixture.means_ = std::move(means);
  mixture.cumulative_.resize(mixture.weights_.size());
  std::partial_sum(mixture.weights_.begin(), mixture.weights_.end(),
                   mixture.cumulative_.begin());
  return mixture;
}

LaplaceMixture LaplaceMixture::Centered(int dim, double scale) {
  return *Create(dim, scale, {1.0}, {std::vector<double>(dim, 0.0)});
}

absl::StatusOr<double> LaplaceMixture::Density(
    std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "point has dimension %d, mixture has dimension %d", x.size(), dim_));
  }
  return DensityUnchecked(x);
}

double LaplaceMixture::DensityUnchecked(std::span<const double> x) const {
  double total = 0;
  for (size_t c = 0; c < weights_.size(); ++c) {
    double l1 = 0;
    for (int j = 0; j < dim_; ++j) l1 += std::abs(x[j] - means_[c][j]);
    total += weights_[c] * std::exp(log_norm_ - l1 / scale_);
  }
  return total;
}

std::vector<double> LaplaceMixture::SampleOne(RngStream& rng) const {
  const double u = rng.UniformOpen();
  size_t c = std::upper_bound(cumulative_.begin(), cumulative_.end(), u) -
             cumulative_.begin();
  c = std::min(c, weights_.size() - 1);
  std::vector<double> x(dim_);
  for (int j = 0; j < dim_; ++j) {
    x[j] = means_[c][j] + scale_ * rng.StandardLaplace();
  }
  return x;
}

std::vector<std::vector<double>> LaplaceMixture::Sample(RngStream& rng,
                                                        int count) const {
  std::vector<std::vector<double>> draws;
  draws.reserve(std::max(count, 0));
  for (int i = 0; i < count; ++i) draws.push_back(SampleOne(rng));
  return draws;
}

std::vector<std::vector<double>> LaplaceMixture::Sample(uint64_t seed,
                                                        int count) const {
  RngStream rng(seed, "mixture-sample", 0, RngPurpose::kMixtureSampling);
  return Sample(rng, count);
}

absl::StatusOr<UniverseSpec> UniverseSpec::Create(double c1, double c2,
                                                  Reference reference) {
  if (absl::Status s = ValidateBounds(c1, c2); !s.ok()) return s;
  return UniverseSpec{c1, c2, std::move(reference)};
}

UniverseSpec UniverseSpec::AllPmfs(int k) {
  return UniverseSpec{0.0, static_cast<double>(k), DiscretePmf::Uniform(k)};
}

absl::Status UniverseSpec::CheckIntegral() const {
  if (absl::Status s = ValidateBounds(c1, c2); !s.ok()) return s;
  const double m = Multiplicity();
  if (std::abs(m - std::round(m)) > 1e-9) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "(c2 - c1) / (1 - c1) = %.12g is not an integer", m));
  }
  return absl::OkStatus();
}

absl::StatusOr<Neighborhood> Neighborhood::Create(Reference center,
                                                  double gamma) {
  if (!(gamma >= 1) || !std::isfinite(gamma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma must be finite and >= 1, got %g", gamma));
  }
  if (std::abs(ReferenceMass(center) - 1) > 1e-12) {
    return absl::InvalidArgumentError("neighborhood center must have mass 1");
  }
  return Neighborhood{std::move(center), gamma};
}

absl::StatusOr<UniverseSpec> Neighborhood::AsUniverse() const {
  return UniverseSpec::Create(1 / gamma, gamma, center);
}

std::string BandCheck::DebugString() const {
  if (contains) {
    return absl::StrFormat("inside band; ratio range [%.6g, %.6g]", min_ratio,
                           max_ratio);
  }
  return absl::StrFormat(
      "outside band at point %d with ratio %.6g; ratio range [%.6g, %.6g]",
      violation_index, violation_ratio, min_ratio, max_ratio);
}

BandCheck CheckBand(std::span<const double> p, std::span<const double> ref,
                    double c1, double c2) {
  BandCheck check;
  check.min_ratio = std::numeric_limits<double>::infinity();
  check.max_ratio = 0;
  const double lo = c1 * (1 - kBandSlack);
  const double hi = c2 * (1 + kBandSlack);
  for (size_t i = 0; i < p.size(); ++i) {
    double ratio;
    if (ref[i] > 0) {
      ratio = p[i] / ref[i];
      check.min_ratio = std::min(check.min_ratio, ratio);
      check.max_ratio = std::max(check.max_ratio, ratio);
    } else {
      ratio = p[i] > 0 ? std::numeric_limits<double>::infinity() : 1.0;
    }
    const bool inside = ref[i] > 0 ? (p[i] >= lo * ref[i] && p[i] <= hi * ref[i])
                                   : p[i] == 0;
    if (!inside && check.contains) {
      check.contains = false;
      check.violation_index = static_cast<int64_t>(i);
      check.violation_ratio = ratio;
    }
  }
  if (check.max_ratio == 0 && !std::isfinite(check.min_ratio)) {
    check.min_ratio = check.max_ratio = 1;
  }
  return check;
}

absl::StatusOr<BandCheck> CheckBand(const UniverseSpec& universe,
                                    const DiscretePmf& p) {
  const auto* ref = std::get_if<DiscretePmf>(&universe.reference);
  if (ref == nullptr) {
    return absl::InvalidArgumentError(
        "discrete distribution against a continuous reference");
  }
  if (ref->size() != p.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "support sizes differ: %d vs %d", p.size(), ref->size()));
  }
  return CheckBand(p.probs(), ref->probs(), universe.c1, universe.c2);
}

absl::StatusOr<BandCheck> CheckBand(const UniverseSpec& universe,
                                    const LaplaceMixture& p,
                                    const QuadratureConfig& grid_config) {
  const auto* ref = std::get_if<LaplaceMixture>(&universe.reference);
  if (ref == nullptr) {
    return absl::InvalidArgumentError(
        "continuous distribution against a discrete reference");
  }
  if (ref->dim() != p.dim() || grid_config.dim() != p.dim()) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  absl::StatusOr<QuadratureGrid> grid = QuadratureGrid::Create(grid_config);
  if (!grid.ok()) return grid.status();
  std::vector<double> pv(grid->size());
  std::vector<double> hv(grid->size());
  std::vector<double> x(grid->dim());
  for (size_t i = 0; i < grid->size(); ++i) {
    grid->Point(i, x);
    pv[i] = p.DensityUnchecked(x);
    hv[i] = ref->DensityUnchecked(x);
  }
  return CheckBand(pv, hv, universe.c1, universe.c2);
}

absl::StatusOr<bool> UniverseContains(const UniverseSpec& universe,
                                      const DiscretePmf& p) {
  absl::StatusOr<BandCheck> check = CheckBand(universe, p);
  if (!check.ok()) return check.status();
  return check->contains;
}

absl::StatusOr<bool> UniverseContains(const UniverseSpec& universe,
                                      const LaplaceMixture& p,
                                      const QuadratureConfig& grid) {
  absl::StatusOr<BandCheck> check = CheckBand(universe, p, grid);
  if (!check.ok()) return check.status();
  return check->contains;
}

namespace {

// gamma = 1 has no universe form (c1 = c2 = 1), so it is checked directly.
UniverseSpec NeighborhoodBand(const Neighborhood& nb) {
  return UniverseSpec{1 / nb.gamma, nb.gamma, nb.center};
}

}  // namespace

absl::StatusOr<bool> NeighborhoodContains(const Neighborhood& nb,
                                          const DiscretePmf& p) {
  return UniverseContains(NeighborhoodBand(nb), p);
}

absl::StatusOr<bool> NeighborhoodContains(const Neighborhood& nb,
                                          const LaplaceMixture& p,
                                          const QuadratureConfig& grid) {
  return UniverseContains(NeighborhoodBand(nb), p, grid);
}

absl::Status MixtureGenConfig::Validate() const {
  if (k_max < 1) return absl::InvalidArgumentError("k_max must be >= 1");
  if (!(k0 > 0) || k0 > 500) {
    return absl::InvalidArgumentError("k0 must be in (0, 500]");
  }
  if (dim < 1) return absl::InvalidArgumentError("dim must be >= 1");
  if (!(scale > 0)) return absl::InvalidArgumentError("scale must be > 0");
  return absl::OkStatus();
}

absl::StatusOr<LaplaceMixture> GenerateRandomMixture(
    const MixtureGenConfig& config, RngStream& rng) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  const int k = static_cast<int>(
      std::min<int64_t>(rng.Poisson(config.k0) + 1, config.k_max));
  std::vector<std::vector<double>> means(k, std::vector<double>(config.dim));
  for (std::vector<double>& m : means) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kMaxBallRejections) {
        return absl::InternalError("l1-ball rejection sampling did not finish");
      }
      double l1 = 0;
      for (double& v : m) {
        v = rng.Uniform(-1, 1);
        l1 += std::abs(v);
      }
      if (l1 <= 1) break;
    }
  }
  std::vector<double> weights(k);
  double total = 0;
  for (double& w : weights) {
    w = rng.StandardExponential();
    total += w;
  }
  for (double& w : weights) w /= total;
  // Re-centre the rounding residue on the largest weight.
  const double residue = 1 - std::accumulate(weights.begin(), weights.end(), 0.0);
  *std::max_element(weights.begin(), weights.end()) += residue;
  return LaplaceMixture::Create(config.dim, config.scale, std::move(weights),
                                std::move(means));
}

absl::StatusOr<LaplaceMixture> GenerateRandomMixture(
    const MixtureGenConfig& config, uint64_t seed) {
  RngStream rng(seed, "mixture-generation", 0,
                RngPurpose::kMixtureGeneration);
  return GenerateRandomMixture(config, rng);
}

namespace {

void Renormalize(std::vector<double>& p) {
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= total;
}

}  // namespace

std::vector<double> RandomBandMember(std::span<const double> ref, double c1,
                                     double c2, RngStream& rng) {
  const size_t k = ref.size();
  std::vector<double> v(k);
  double mass = 0;
  for (size_t i = 0; i < k; ++i) {
    v[i] = rng.Uniform(c1, c2);
    mass += v[i] * ref[i];
  }
  // Shrink toward c1 or c2 so the total mass is exactly 1.
  if (mass > 1) {
    const double t = (1 - c1) / (mass - c1);
    for (double& x : v) x = c1 + t * (x - c1);
  } else if (mass < 1) {
    const double t = (c2 - 1) / (c2 - mass);
    for (double& x : v) x = c2 - t * (c2 - x);
  }
  std::vector<double> p(k);
  for (size_t i = 0; i < k; ++i) p[i] = v[i] * ref[i];
  Renormalize(p);
  return p;
}

std::vector<double> RandomBandExtreme(std::span<const double> ref, double c1,
                                      double c2, RngStream& rng) {
  const size_t k = ref.size();
  std::vector<size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> p(k);
  for (size_t i = 0; i < k; ++i) p[i] = c1 * ref[i];
  double remaining = 1 - c1 * std::accumulate(ref.begin(), ref.end(), 0.0);
  for (size_t i : order) {
    const double capacity = (c2 - c1) * ref[i];
    if (capacity <= remaining) {
      p[i] = c2 * ref[i];
      remaining -= capacity;
    } else {
      p[i] += std::max(remaining, 0.0);
      break;
    }
  }
  Renormalize(p);
  return p;
}

std::vector<double> DiscretizeOnGrid(DensityRef f, const QuadratureGrid& grid,
                                     double* total) {
  std::vector<double> masses = grid.Evaluate(f);
  const std::vector<double>& w = grid.weights();
  double sum = 0;
  for (size_t i = 0; i < masses.size(); ++i) {
    masses[i] *= w[i];
    sum += masses[i];
  }
  if (total != nullptr) *total = sum;
  if (sum > 0) {
    for (double& m : masses) m /= sum;
  }
  return masses;
}

}  // namespace ldp_sampling
