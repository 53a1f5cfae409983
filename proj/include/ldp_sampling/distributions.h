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

#ifndef LDP_SAMPLING_DISTRIBUTIONS_H_
#define LDP_SAMPLING_DISTRIBUTIONS_H_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldp_sampling/numerics.h"
#include "ldp_sampling/quadrature.h"

namespace ldp_sampling {

// Relative slack used by every band-membership check.
inline constexpr double kBandSlack = 1e-9;

// A probability mass function on {0, ..., k-1}, k >= 2.
class DiscretePmf {
 public:
  // Entries must be finite, nonnegative and sum to 1 within 1e-12.
  static absl::StatusOr<DiscretePmf> Create(std::vector<double> probs);
  static DiscretePmf Uniform(int k);

  int size() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  double operator[](int i) const { return probs_[i]; }

 private:
  explicit DiscretePmf(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

// sum_i w_i (2b)^-n exp(-||x - m_i||_1 / b) on R^n.
class LaplaceMixture {
 public:
  static absl::StatusOr<LaplaceMixture> Create(
      int dim, double scale, std::vector<double> weights,
      std::vector<std::vector<double>> means);
  // One component centred at the origin.
  static LaplaceMixture Centered(int dim, double scale);

  int dim() const { return dim_; }
  double scale() const { return scale_; }
  int num_components() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<double>>& means() const { return means_; }

  absl::StatusOr<double> Density(std::span<const double> x) const;
  // Density without the dimension check.
  double DensityUnchecked(std::span<const double> x) const;

  // i.i.d. draws: component by weight, then m + b * Laplace(0, 1) per axis.
  std::vector<std::vector<double>> Sample(uint64_t seed, int count) const;
  std::vector<std::vector<double>> Sample(RngStream& rng, int count) const;
  std::vector<double> SampleOne(RngStream& rng) const;

 private:
  LaplaceMixture() = default;

  int dim_ = 1;
  double scale_ = 1;
  double log_norm_ = 0;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
  std::vector<std::vector<double>> means_;
};

// A reference measure: a pmf on [k] or a continuous density.
using Reference = std::variant<DiscretePmf, LaplaceMixture>;

// The class of distributions P with c1 h <= dP/dmu <= c2 h.
struct UniverseSpec {
  double c1 = 0;
  double c2 = 2;
  Reference reference = DiscretePmf::Uniform(2);

  // Requires 0 <= c1 < 1 < c2.
  static absl::StatusOr<UniverseSpec> Create(double c1, double c2,
                                             Reference reference);
  // c1 = 0, c2 = k, uniform reference on [k]: every pmf on [k].
  static UniverseSpec AllPmfs(int k);

  bool is_discrete() const {
    return std::holds_alternative<DiscretePmf>(reference);
  }
  // (c2 - c1) / (1 - c1).
  double Multiplicity() const { return (c2 - c1) / (1 - c1); }
  // OK when Multiplicity() is an integer within 1e-9.
  absl::Status CheckIntegral() const;
};

// N_gamma(P0): distributions whose ratio to P0 lies in [1/gamma, gamma].
struct Neighborhood {
  Reference center = DiscretePmf::Uniform(2);
  double gamma = 1;

  static absl::StatusOr<Neighborhood> Create(Reference center, double gamma);
  // The equivalent universe (1/gamma, gamma, center). Requires gamma > 1.
  absl::StatusOr<UniverseSpec> AsUniverse() const;
};

// Result of comparing p against [c1 ref, c2 ref].
struct BandCheck {
  bool contains = true;
  // Extremes of p / ref over points where ref > 0.
  double min_ratio = 1;
  double max_ratio = 1;
  // First point violating the band, or -1.
  int64_t violation_index = -1;
  double violation_ratio = 1;

  std::string DebugString() const;
};

// Pointwise check of c1 ref (1 - slack) <= p <= c2 ref (1 + slack).
BandCheck CheckBand(std::span<const double> p, std::span<const double> ref,
                    double c1, double c2);

absl::StatusOr<BandCheck> CheckBand(const UniverseSpec& universe,
                                    const DiscretePmf& p);
// Continuous universes are checked on the nodes of `grid` only.
absl::StatusOr<BandCheck> CheckBand(const UniverseSpec& universe,
                                    const LaplaceMixture& p,
                                    const QuadratureConfig& grid);

absl::StatusOr<bool> UniverseContains(const UniverseSpec& universe,
                                      const DiscretePmf& p);
absl::StatusOr<bool> UniverseContains(const UniverseSpec& universe,
                                      const LaplaceMixture& p,
                                      const QuadratureConfig& grid);
absl::StatusOr<bool> NeighborhoodContains(const Neighborhood& nb,
                                          const DiscretePmf& p);
absl::StatusOr<bool> NeighborhoodContains(const Neighborhood& nb,
                                          const LaplaceMixture& p,
                                          const QuadratureConfig& grid);

// Random mixture generation.
struct MixtureGenConfig {
  int k_max = 10;
  double k0 = 2;
  int dim = 1;
  double scale = 1;

  absl::Status Validate() const;
};

// k = min(Poisson(k0) + 1, k_max); means uniform on the unit l1 ball
// ([-1, 1] in 1-D); weights uniform on the simplex.
absl::StatusOr<LaplaceMixture> GenerateRandomMixture(
    const MixtureGenConfig& config, RngStream& rng);
absl::StatusOr<LaplaceMixture> GenerateRandomMixture(
    const MixtureGenConfig& config, uint64_t seed);

// A random pmf p with c1 ref <= p <= c2 ref and sum p = 1. Requires
// c1 <= 1 <= c2 and sum ref = 1.
std::vector<double> RandomBandMember(std::span<const double> ref, double c1,
                                     double c2, RngStream& rng);
// A vertex-like band member: ratio c2 on a random set of points, c1 on the
// rest, and one point taking the remaining mass.
std::vector<double> RandomBandExtreme(std::span<const double> ref, double c1,
                                      double c2, RngStream& rng);

// Masses w_i f(x_i) on a grid, normalized to sum 1. `total` receives the
// unnormalized sum when non-null.
std::vector<double> DiscretizeOnGrid(DensityRef f, const QuadratureGrid& grid,
                                     double* total = nullptr);

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_DISTRIBUTIONS_H_
