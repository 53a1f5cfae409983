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

#ifndef LDP_SAMPLING_SAMPLERS_H_
#define LDP_SAMPLING_SAMPLERS_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ldp_sampling/distributions.h"
#include "ldp_sampling/divergence.h"
#include "ldp_sampling/quadrature.h"
#include "ldp_sampling/tradeoff.h"

namespace ldp_sampling {

// A continuous input and reference discretized on a shared grid. Masses are
// normalized to sum 1, so the discrete machinery applies unchanged.
struct GridPair {
  std::shared_ptr<const QuadratureGrid> grid;
  LaplaceMixture input = LaplaceMixture::Centered(1, 1);
  LaplaceMixture reference = LaplaceMixture::Centered(1, 1);
  std::vector<double> input_masses;
  std::vector<double> reference_masses;
  // Z_ref / Z_input, so input_masses / reference_masses equals
  // density_scale * p(x) / h(x).
  double density_scale = 1;

  static absl::StatusOr<GridPair> Create(const LaplaceMixture& input,
                                         const LaplaceMixture& reference,
                                         const QuadratureConfig& config);
  static absl::StatusOr<GridPair> Create(
      const LaplaceMixture& input, const LaplaceMixture& reference,
      std::shared_ptr<const QuadratureGrid> grid);
};

enum class SamplerKind { kIdentity, kLinear, kClip };

// "identity", "linear" or "clip".
std::string SamplerKindName(SamplerKind kind);

struct SamplerProvenance {
  SamplerKind kind = SamplerKind::kIdentity;
  std::string privacy;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double r_p = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double b_eps = std::numeric_limits<double>::quiet_NaN();
  double c1 = 0;
  double c2 = 0;
  bool trivial = false;
};

// The privatized distribution Q(P).
struct SamplerOutput {
  enum class Form { kDiscrete, kContinuous };

  Form form = Form::kDiscrete;
  // Output pmf (discrete) or output masses on the grid nodes (continuous).
  std::vector<double> masses;
  // dQ / d(reference) at each support point or grid node.
  std::vector<double> ratio;
  // The input P and reference on the same support.
  std::vector<double> input_masses;
  std::vector<double> reference_masses;

  // Continuous outputs only.
  std::shared_ptr<const QuadratureGrid> grid;
  std::optional<LaplaceMixture> input;
  std::optional<LaplaceMixture> reference;
  double density_scale = 1;

  SamplerProvenance provenance;

  bool is_discrete() const { return form == Form::kDiscrete; }

  // dQ/dh at an arbitrary point (continuous outputs).
  double RatioAt(std::span<const double> x) const;
  // q(x) = RatioAt(x) h(x) (continuous outputs).
  double DensityAt(std::span<const double> x) const;

  // D_f(P || Q(P)) on the shared support.
  double DivergenceFromInput(const FDivergence& f) const;
};

// lambda p + (1 - lambda) ref, entrywise.
std::vector<double> LinearMix(std::span<const double> p,
                              std::span<const double> ref, double lambda);

// Solves sum_i w_i clip(rho_i / r; b, b_eps) = 1 for r. Requires
// b <= 1 <= b_eps and sum_i w_i rho_i = 1.
absl::StatusOr<double> SolveNormalizer(std::span<const double> rho,
                                       std::span<const double> w, double b,
                                       double b_eps);

struct ClipSolution {
  double r_p = 1;
  std::vector<double> ratio;
  std::vector<double> masses;
};
// Clips dP/dref into [b, b_eps] after normalizing by r_P.
absl::StatusOr<ClipSolution> ClipMasses(std::span<const double> p,
                                        std::span<const double> ref, double b,
                                        double b_eps);

// Q(P) = lambda P + (1 - lambda) h.
class LinearSampler {
 public:
  // lambda = lambda*(c1, c2, g); requires the integrality condition. In the
  // trivial regime lambda = 1.
  static absl::StatusOr<LinearSampler> Create(UniverseSpec universe,
                                              TradeoffFunction privacy);
  static absl::StatusOr<LinearSampler> WithLambda(UniverseSpec universe,
                                                  TradeoffFunction privacy,
                                                  double lambda);

  double lambda() const { return lambda_; }
  bool trivial() const { return trivial_; }
  const UniverseSpec& universe() const { return universe_; }
  const TradeoffFunction& privacy() const { return privacy_; }

  // Inputs outside the universe give FailedPrecondition.
  absl::StatusOr<SamplerOutput> Apply(const DiscretePmf& p) const;
  absl::StatusOr<SamplerOutput> Apply(const GridPair& pair) const;
  absl::StatusOr<SamplerOutput> Apply(const LaplaceMixture& p,
                                      const QuadratureConfig& grid) const;

 private:
  LinearSampler(UniverseSpec universe, TradeoffFunction privacy,
                double lambda, bool trivial)
      : universe_(std::move(universe)),
        privacy_(privacy),
        lambda_(lambda),
        trivial_(trivial) {}

  SamplerProvenance Provenance() const;

  UniverseSpec universe_;
  TradeoffFunction privacy_;
  double lambda_;
  bool trivial_;
};

// dQ/dh = clip(rho / r_P; b, b e^eps), pure eps-LDP.
class ClipSampler {
 public:
  // b = (c2 - c1) / ((e^eps - 1)(1 - c1) + c2 - c1); requires integrality.
  static absl::StatusOr<ClipSampler> Global(UniverseSpec universe,
                                            double epsilon);
  // b = (gamma + 1) / (gamma + e^eps).
  static absl::StatusOr<ClipSampler> Local(const Neighborhood& nb,
                                           double epsilon);

  double b() const { return b_; }
  double b_eps() const { return b_ * std::exp(epsilon_); }
  double epsilon() const { return epsilon_; }
  const UniverseSpec& universe() const { return universe_; }

  absl::StatusOr<SamplerOutput> Apply(const DiscretePmf& p) const;
  absl::StatusOr<SamplerOutput> Apply(const GridPair& pair) const;
  absl::StatusOr<SamplerOutput> Apply(const LaplaceMixture& p,
                                      const QuadratureConfig& grid) const;

 private:
  ClipSampler(UniverseSpec universe, double epsilon, double b)
      : universe_(std::move(universe)), epsilon_(epsilon), b_(b) {}

  absl::StatusOr<SamplerOutput> ApplyMasses(std::vector<double> p,
                                            std::vector<double> ref) const;

  UniverseSpec universe_;
  double epsilon_;
  double b_;
};

// Neighborhood-gated samplers.
enum class LocalSamplerKind { kLinearFunctional, kNonLinearPure };

struct LocalSamplerSpec {
  LocalSamplerKind kind = LocalSamplerKind::kNonLinearPure;
  // For kNonLinearPure only the epsilon is used; delta must be 0.
  TradeoffFunction privacy = *TradeoffFunction::Pure(1);
  // Optional replacements for inputs outside the neighborhood. Without one,
  // such inputs are rejected.
  std::function<absl::StatusOr<DiscretePmf>(const DiscretePmf&,
                                            const Neighborhood&)>
      discrete_projection;
  std::function<absl::StatusOr<LaplaceMixture>(const LaplaceMixture&,
                                               const Neighborhood&)>
      continuous_projection;
};

absl::StatusOr<SamplerOutput> LocalApply(const LocalSamplerSpec& spec,
                                         const Neighborhood& nb,
                                         const DiscretePmf& p);
absl::StatusOr<SamplerOutput> LocalApply(const LocalSamplerSpec& spec,
                                         const Neighborhood& nb,
                                         const LaplaceMixture& p,
                                         const QuadratureConfig& grid);

// True for the error returned when an input lies outside the sampler's class.
bool IsMembershipError(const absl::Status& status);

struct Draws {
  // Discrete outputs.
  std::vector<int> indices;
  // Continuous outputs.
  std::vector<std::vector<double>> points;
  // Continuous clip outputs: proposals used by rejection sampling.
  int64_t proposals = 0;
};

// Inverse-CDF for pmfs; Bernoulli(lambda) mixture for continuous linear
// outputs; rejection from the reference with envelope b e^eps for clip
// outputs.
absl::StatusOr<Draws> Draw(const SamplerOutput& output, uint64_t seed,
                           int count);

// A discrete mechanism: input pmf to output pmf.
using DiscreteMechanism =
    std::function<absl::StatusOr<std::vector<double>>(const DiscretePmf&)>;

struct LdpVerification {
  // max over pairs and events of Q(A|P) - e^eps Q(A|P') - delta.
  double max_excess = -std::numeric_limits<double>::infinity();
  // max over pairs and points of q(x|P) / q(x|P').
  double max_pointwise_ratio = 0;
  int pairs = 0;
  int64_t events = 0;
  bool exhaustive = false;
};

// Checks the (eps, delta) inequality over `trials` random pairs drawn from
// the class (interior and extreme members), in both orders, on all
// 2^k - 2 nontrivial events when k <= 12 and on singletons and their
// complements otherwise.
absl::StatusOr<LdpVerification> VerifyLdpDiscrete(
    const DiscreteMechanism& mechanism, const UniverseSpec& universe,
    double epsilon, double delta, int trials, uint64_t seed);

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_SAMPLERS_H_
