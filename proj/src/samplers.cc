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

#include "ldp_sampling/samplers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "ldp_sampling/numerics.h"
#include "ldp_sampling/risk.h"

namespace ldp_sampling {
namespace {

constexpr double kRhoFloor = 1e-12;
constexpr double kBracketTolerance = 1e-13;
constexpr double kBisectTolerance = 1e-15;
constexpr double kMassTolerance = 1e-9;
constexpr int kMaxEnumeratedSupport = 12;
constexpr int64_t kMaxProposalsPerDraw = 100000;

absl::Status MembershipError(const std::string& what, const BandCheck& check) {
  return absl::FailedPreconditionError(
      absl::StrFormat("input is outside the %s: %s", what,
                      check.DebugString()));
}

void Normalize(std::vector<double>& masses) {
  const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (total > 0) {
    for (double& m : masses) m /= total;
  }
}

std::vector<double> Ratios(std::span<const double> masses,
                           std::span<const double> ref) {
  std::vector<double> ratio(masses.size());
  for (size_t i = 0; i < masses.size(); ++i) {
    ratio[i] = ref[i] > 0 ? masses[i] / ref[i] : 0.0;
  }
  return ratio;
}

SamplerOutput DiscreteOutput(std::vector<double> p, std::vector<double> ref,
                             std::vector<double> masses,
                             std::vector<double> ratio,
                             SamplerProvenance provenance) {
  SamplerOutput out;
  out.form = SamplerOutput::Form::kDiscrete;
  out.masses = std::move(masses);
  out.ratio = std::move(ratio);
  out.input_masses = std::move(p);
  out.reference_masses = std::move(ref);
  out.provenance = std::move(provenance);
  return out;
}

void AttachContinuous(const GridPair& pair, SamplerOutput& out) {
  out.form = SamplerOutput::Form::kContinuous;
  out.grid = pair.grid;
  out.input = pair.input;
  out.reference = pair.reference;
  out.density_scale = pair.density_scale;
}

const DiscretePmf* DiscreteReference(const UniverseSpec& universe) {
  return std::get_if<DiscretePmf>(&universe.reference);
}

absl::Status CheckPairMatchesUniverse(const UniverseSpec& universe,
                                      const GridPair& pair) {
  const auto* ref = std::get_if<LaplaceMixture>(&universe.reference);
  if (ref == nullptr) {
    return absl::InvalidArgumentError(
        "continuous input for a sampler with a discrete reference");
  }
  if (ref->dim() != pair.input.dim() || pair.grid == nullptr) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  return absl::OkStatus();
}

}  // namespace

std::string SamplerKindName(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kIdentity:
      return "identity";
    case SamplerKind::kLinear:
      return "linear";
    case SamplerKind::kClip:
      return "clip";
  }
  return "";
}

absl::StatusOr<GridPair> GridPair::Create(const LaplaceMixture& input,
                                          const LaplaceMixture& reference,
                                          const QuadratureConfig& config) {
  absl::StatusOr<QuadratureGrid> grid = QuadratureGrid::Create(config);
  if (!grid.ok()) return grid.status();
  return Create(input, reference,
                std::make_shared<const QuadratureGrid>(*std::move(grid)));
}

absl::StatusOr<GridPair> GridPair::Create(
    const LaplaceMixture& input, const LaplaceMixture& reference,
    std::shared_ptr<const QuadratureGrid> grid) {
  if (grid == nullptr) return absl::InvalidArgumentError("null grid");
  if (input.dim() != reference.dim() || grid->dim() != input.dim()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "dimension mismatch: input %d, reference %d, grid %d", input.dim(),
        reference.dim(), grid->dim()));
  }
  GridPair pair;
  pair.grid = std::move(grid);
  pair.input = input;
  pair.reference = reference;
  double z_input = 0;
  double z_reference = 0;
  pair.input_masses = DiscretizeOnGrid(
      [&](std::span<const double> x) { return input.DensityUnchecked(x); },
      *pair.grid, &z_input);
  pair.reference_masses = DiscretizeOnGrid(
      [&](std::span<const double> x) { return reference.DensityUnchecked(x); },
      *pair.grid, &z_reference);
  if (!(z_input > 0) || !(z_reference > 0)) {
    return absl::InvalidArgumentError("density has no mass on the grid");
  }
  pair.density_scale = z_reference / z_input;
  return pair;
}

double SamplerOutput::RatioAt(std::span<const double> x) const {
  if (!input.has_value() || !reference.has_value()) return 0;
  const double h = reference->DensityUnchecked(x);
  if (!(h > 0)) return 0;
  const double rho = density_scale * input->DensityUnchecked(x) / h;
  switch (provenance.kind) {
    case SamplerKind::kIdentity:
      return rho;
    case SamplerKind::kLinear:
      return provenance.lambda * rho + (1 - provenance.lambda);
    case SamplerKind::kClip:
      return std::clamp(rho / provenance.r_p, provenance.b, provenance.b_eps);
  }
  return 0;
}

double SamplerOutput::DensityAt(std::span<const double> x) const {
  if (!reference.has_value()) return 0;
  return RatioAt(x) * reference->DensityUnchecked(x);
}

double SamplerOutput::DivergenceFromInput(const FDivergence& f) const {
  return DivergenceOfMasses(f, input_masses, masses);
}

std::vector<double> LinearMix(std::span<const double> p,
                              std::span<const double> ref, double lambda) {
  std::vector<double> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    q[i] = lambda * p[i] + (1 - lambda) * ref[i];
  }
  return q;
}

absl::StatusOr<double> SolveNormalizer(std::span<const double> rho,
                                       std::span<const double> w, double b,
                                       double b_eps) {
  if (rho.size() != w.size() || rho.empty()) {
    return absl::InvalidArgumentError("rho and weights must match in size");
  }
  if (!(b > 0) || b > 1 + 1e-12 || b_eps < 1 - 1e-12 || b_eps < b) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need 0 < b <= 1 <= b_eps, got b=%g b_eps=%g", b, b_eps));
  }
  std::vector<std::pair<double, double>> points;
  points.reserve(rho.size());
  double mass = 0;
  for (size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] >= 0) || !(w[i] >= 0)) {
      return absl::InvalidArgumentError("rho and weights must be >= 0");
    }
    if (w[i] > 0) points.emplace_back(rho[i], w[i]);
    mass += w[i] * rho[i];
  }
  if (std::abs(mass - 1) > kMassTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("rho must integrate to 1, got %.12g", mass));
  }
  if (b_eps - b <= 1e-15) return 1.0;
  std::sort(points.begin(), points.end());
  const size_t n = points.size();
  std::vector<double> sorted_rho(n);
  std::vector<double> cum_w(n + 1, 0.0);
  std::vector<double> cum_wr(n + 1, 0.0);
  for (size_t i = 0; i < n; ++i) {
    sorted_rho[i] = points[i].first;
    cum_w[i + 1] = cum_w[i] + points[i].second;
    cum_wr[i + 1] = cum_wr[i] + points[i].second * points[i].first;
  }
  struct Split {
    size_t lo;  // [0, lo) clipped to b
    size_t hi;  // [hi, n) clipped to b_eps
  };
  auto split_at = [&](double r) {
    const size_t lo = std::lower_bound(sorted_rho.begin(), sorted_rho.end(),
                                       b * r) - sorted_rho.begin();
    const size_t hi = std::upper_bound(sorted_rho.begin(), sorted_rho.end(),
                                       b_eps * r) - sorted_rho.begin();
    return Split{lo, std::max(lo, hi)};
  };
  auto excess = [&](double r) {
    const Split s = split_at(r);
    return b * cum_w[s.lo] + b_eps * (cum_w[n] - cum_w[s.hi]) +
           (cum_wr[s.hi] - cum_wr[s.lo]) / r - 1;
  };

  const double r_lo = std::max(sorted_rho.front() / b_eps, kRhoFloor);
  const double r_hi = std::max(sorted_rho.back() / b, r_lo * 2);
  absl::StatusOr<Bracket> bracket =
      MakeBracket(excess, r_lo, r_hi, kBracketTolerance);
  if (!bracket.ok()) {
    return absl::InternalError(absl::StrCat(
        "normalizer bracket failed: ", bracket.status().message()));
  }
  absl::StatusOr<double> r = Bisect(excess, *bracket, kBisectTolerance);
  if (!r.ok()) return r.status();

  // On the final piece G is affine in 1/r, so solve it exactly there.
  const Split s = split_at(*r);
  const double mid = cum_wr[s.hi] - cum_wr[s.lo];
  const double rest =
      1 - b * cum_w[s.lo] - b_eps * (cum_w[n] - cum_w[s.hi]);
  if (mid > 0 && rest > 0) {
    const double exact = mid / rest;
    if (std::abs(excess(exact)) <= std::abs(excess(*r))) return exact;
  }
  return *r;
}

absl::StatusOr<ClipSolution> ClipMasses(std::span<const double> p,
                                        std::span<const double> ref, double b,
                                        double b_eps) {
  if (p.size() != ref.size()) {
    return absl::InvalidArgumentError("support sizes differ");
  }
  std::vector<double> rho = Ratios(p, ref);
  absl::StatusOr<double> r = SolveNormalizer(rho, ref, b, b_eps);
  if (!r.ok()) return r.status();
  ClipSolution solution;
  solution.r_p = *r;
  solution.ratio.resize(p.size());
  solution.masses.resize(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    solution.ratio[i] = std::clamp(rho[i] / *r, b, b_eps);
    solution.masses[i] = solution.ratio[i] * ref[i];
  }
  Normalize(solution.masses);
  return solution;
}

absl::StatusOr<LinearSampler> LinearSampler::Create(UniverseSpec universe,
                                                    TradeoffFunction privacy) {
  if (absl::Status s = universe.CheckIntegral(); !s.ok()) return s;
  absl::StatusOr<LambdaStar> lambda =
      LambdaStarFor(universe.c1, universe.c2, privacy);
  if (!lambda.ok()) return lambda.status();
  return LinearSampler(std::move(universe), privacy,
                       lambda->trivial ? 1.0 : lambda->value, lambda->trivial);
}

absl::StatusOr<LinearSampler> LinearSampler::WithLambda(
    UniverseSpec universe, TradeoffFunction privacy, double lambda) {
  if (!(lambda >= 0 && lambda <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda must be in [0, 1], got %g", lambda));
  }
  return LinearSampler(std::move(universe), privacy, lambda, false);
}

SamplerProvenance LinearSampler::Provenance() const {
  SamplerProvenance provenance;
  provenance.kind = SamplerKind::kLinear;
  provenance.privacy = privacy_.DebugString();
  provenance.lambda = lambda_;
  provenance.c1 = universe_.c1;
  provenance.c2 = universe_.c2;
  provenance.trivial = trivial_;
  return provenance;
}

absl::StatusOr<SamplerOutput> LinearSampler::Apply(const DiscretePmf& p) const {
  absl::StatusOr<BandCheck> check = CheckBand(universe_, p);
  if (!check.ok()) return check.status();
  if (!check->contains) return MembershipError("universe", *check);
  const std::vector<double>& ref = DiscreteReference(universe_)->probs();
  std::vector<double> masses = LinearMix(p.probs(), ref, lambda_);
  std::vector<double> ratio = Ratios(masses, ref);
  return DiscreteOutput(p.probs(), ref, std::move(masses), std::move(ratio),
                        Provenance());
}

absl::StatusOr<SamplerOutput> LinearSampler::Apply(const GridPair& pair) const {
  if (absl::Status s = CheckPairMatchesUniverse(universe_, pair); !s.ok()) {
    return s;
  }
  const BandCheck check = CheckBand(pair.input_masses, pair.reference_masses,
                                    universe_.c1, universe_.c2);
  if (!check.contains) return MembershipError("universe", check);
  std::vector<double> masses =
      LinearMix(pair.input_masses, pair.reference_masses, lambda_);
  std::vector<double> ratio = Ratios(masses, pair.reference_masses);
  SamplerOutput out =
      DiscreteOutput(pair.input_masses, pair.reference_masses,
                     std::move(masses), std::move(ratio), Provenance());
  AttachContinuous(pair, out);
  return out;
}

absl::StatusOr<SamplerOutput> LinearSampler::Apply(
    const LaplaceMixture& p, const QuadratureConfig& grid) const {
  const auto* ref = std::get_if<LaplaceMixture>(&universe_.reference);
  if (ref == nullptr) {
    return absl::InvalidArgumentError("sampler has a discrete reference");
  }
  absl::StatusOr<GridPair> pair = GridPair::Create(p, *ref, grid);
  if (!pair.ok()) return pair.status();
  return Apply(*pair);
}

absl::StatusOr<ClipSampler> ClipSampler::Global(UniverseSpec universe,
                                                double epsilon) {
  if (absl::Status s = universe.CheckIntegral(); !s.ok()) return s;
  if (!(epsilon >= 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be finite and >= 0, got %g", epsilon));
  }
  const double c1 = universe.c1;
  const double c2 = universe.c2;
  const double b = (c2 - c1) / ((std::exp(epsilon) - 1) * (1 - c1) + c2 - c1);
  return ClipSampler(std::move(universe), epsilon, b);
}

absl::StatusOr<ClipSampler> ClipSampler::Local(const Neighborhood& nb,
                                               double epsilon) {
  if (!(nb.gamma > 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma must be > 1, got %g", nb.gamma));
  }
  if (!(epsilon >= 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be finite and >= 0, got %g", epsilon));
  }
  absl::StatusOr<UniverseSpec> universe = nb.AsUniverse();
  if (!universe.ok()) return universe.status();
  const double b = (nb.gamma + 1) / (nb.gamma + std::exp(epsilon));
  return ClipSampler(*std::move(universe), epsilon, b);
}

absl::StatusOr<SamplerOutput> ClipSampler::ApplyMasses(
    std::vector<double> p, std::vector<double> ref) const {
  const BandCheck check = CheckBand(p, ref, universe_.c1, universe_.c2);
  if (!check.contains) return MembershipError("universe", check);
  absl::StatusOr<ClipSolution> solution = ClipMasses(p, ref, b_, b_eps());
  if (!solution.ok()) return solution.status();
  SamplerProvenance provenance;
  provenance.kind = SamplerKind::kClip;
  provenance.privacy = TradeoffFunction::Pure(epsilon_)->DebugString();
  provenance.r_p = solution->r_p;
  provenance.b = b_;
  provenance.b_eps = b_eps();
  provenance.c1 = universe_.c1;
  provenance.c2 = universe_.c2;
  return DiscreteOutput(std::move(p), std::move(ref),
                        std::move(solution->masses),
                        std::move(solution->ratio), std::move(provenance));
}

absl::StatusOr<SamplerOutput> ClipSampler::Apply(const DiscretePmf& p) const {
  const DiscretePmf* ref = DiscreteReference(universe_);
  if (ref == nullptr) {
    return absl::InvalidArgumentError("sampler has a continuous reference");
  }
  if (ref->size() != p.size()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "support sizes differ: %d vs %d", p.size(), ref->size()));
  }
  return ApplyMasses(p.probs(), ref->probs());
}

absl::StatusOr<SamplerOutput> ClipSampler::Apply(const GridPair& pair) const {
  if (absl::Status s = CheckPairMatchesUniverse(universe_, pair); !s.ok()) {
    return s;
  }
  absl::StatusOr<SamplerOutput> out =
      ApplyMasses(pair.input_masses, pair.reference_masses);
  if (!out.ok()) return out.status();
  AttachContinuous(pair, *out);
  return out;
}

absl::StatusOr<SamplerOutput> ClipSampler::Apply(
    const LaplaceMixture& p, const QuadratureConfig& grid) const {
  const auto* ref = std::get_if<LaplaceMixture>(&universe_.reference);
  if (ref == nullptr) {
    return absl::InvalidArgumentError("sampler has a discrete reference");
  }
  absl::StatusOr<GridPair> pair = GridPair::Create(p, *ref, grid);
  if (!pair.ok()) return pair.status();
  return Apply(*pair);
}

bool IsMembershipError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kFailedPrecondition;
}

namespace {

absl::StatusOr<double> PureEpsilon(const TradeoffFunction& g) {
  if (g.kind() == TradeoffFunction::Kind::kGaussian || g.delta() != 0) {
    return absl::InvalidArgumentError(
        "the non-linear local sampler needs a pure epsilon guarantee");
  }
  return g.epsilon();
}

absl::Status CheckLocalGamma(const Neighborhood& nb) {
  if (!(nb.gamma > 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma must be > 1, got %g", nb.gamma));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<SamplerOutput> LocalApply(const LocalSamplerSpec& spec,
                                         const Neighborhood& nb,
                                         const DiscretePmf& p) {
  if (absl::Status s = CheckLocalGamma(nb); !s.ok()) return s;
  absl::StatusOr<UniverseSpec> universe = nb.AsUniverse();
  if (!universe.ok()) return universe.status();
  absl::StatusOr<BandCheck> check = CheckBand(*universe, p);
  if (!check.ok()) return check.status();
  DiscretePmf input = p;
  if (!check->contains) {
    if (!spec.discrete_projection) {
      return MembershipError(
          absl::StrFormat("neighborhood (gamma=%g)", nb.gamma), *check);
    }
    absl::StatusOr<DiscretePmf> projected = spec.discrete_projection(p, nb);
    if (!projected.ok()) return projected.status();
    input = *std::move(projected);
  }
  if (spec.kind == LocalSamplerKind::kLinearFunctional) {
    absl::StatusOr<LinearSampler> sampler =
        LinearSampler::Create(*universe, spec.privacy);
    if (!sampler.ok()) return sampler.status();
    return sampler->Apply(input);
  }
  absl::StatusOr<double> epsilon = PureEpsilon(spec.privacy);
  if (!epsilon.ok()) return epsilon.status();
  absl::StatusOr<ClipSampler> sampler = ClipSampler::Local(nb, *epsilon);
  if (!sampler.ok()) return sampler.status();
  return sampler->Apply(input);
}

absl::StatusOr<SamplerOutput> LocalApply(const LocalSamplerSpec& spec,
                                         const Neighborhood& nb,
                                         const LaplaceMixture& p,
                                         const QuadratureConfig& grid) {
  if (absl::Status s = CheckLocalGamma(nb); !s.ok()) return s;
  const auto* center = std::get_if<LaplaceMixture>(&nb.center);
  if (center == nullptr) {
    return absl::InvalidArgumentError("neighborhood center is discrete");
  }
  absl::StatusOr<UniverseSpec> universe = nb.AsUniverse();
  if (!universe.ok()) return universe.status();
  absl::StatusOr<GridPair> pair = GridPair::Create(p, *center, grid);
  if (!pair.ok()) return pair.status();
  const BandCheck check = CheckBand(pair->input_masses,
                                    pair->reference_masses, universe->c1,
                                    universe->c2);
  if (!check.contains) {
    if (!spec.continuous_projection) {
      return MembershipError(
          absl::StrFormat("neighborhood (gamma=%g)", nb.gamma), check);
    }
    absl::StatusOr<LaplaceMixture> projected =
        spec.continuous_projection(p, nb);
    if (!projected.ok()) return projected.status();
    pair = GridPair::Create(*projected, *center, pair->grid);
    if (!pair.ok()) return pair.status();
  }
  if (spec.kind == LocalSamplerKind::kLinearFunctional) {
    absl::StatusOr<LinearSampler> sampler =
        LinearSampler::Create(*universe, spec.privacy);
    if (!sampler.ok()) return sampler.status();
    return sampler->Apply(*pair);
  }
  absl::StatusOr<double> epsilon = PureEpsilon(spec.privacy);
  if (!epsilon.ok()) return epsilon.status();
  absl::StatusOr<ClipSampler> sampler = ClipSampler::Local(nb, *epsilon);
  if (!sampler.ok()) return sampler.status();
  return sampler->Apply(*pair);
}

absl::StatusOr<Draws> Draw(const SamplerOutput& output, uint64_t seed,
                           int count) {
  if (count < 0) return absl::InvalidArgumentError("count must be >= 0");
  RngStream rng(seed, "sampler-draw", 0, RngPurpose::kSamplerDraw);
  Draws draws;
  if (output.is_discrete()) {
    std::vector<double> cumulative(output.masses.size());
    std::partial_sum(output.masses.begin(), output.masses.end(),
                     cumulative.begin());
    const double total = cumulative.empty() ? 0.0 : cumulative.back();
    if (!(total > 0)) return absl::InvalidArgumentError("empty output pmf");
    draws.indices.reserve(count);
    for (int i = 0; i < count; ++i) {
      const double u = rng.UniformOpen() * total;
      size_t index = std::upper_bound(cumulative.begin(), cumulative.end(),
                                      u) - cumulative.begin();
      draws.indices.push_back(
          static_cast<int>(std::min(index, cumulative.size() - 1)));
    }
    return draws;
  }
  if (!output.input.has_value() || !output.reference.has_value()) {
    return absl::InvalidArgumentError(
        "continuous output lacks its input or reference");
  }
  draws.points.reserve(count);
  const SamplerProvenance& prov = output.provenance;
  for (int i = 0; i < count; ++i) {
    switch (prov.kind) {
      case SamplerKind::kIdentity:
        draws.points.push_back(output.input->SampleOne(rng));
        break;
      case SamplerKind::kLinear:
        draws.points.push_back(rng.UniformOpen() < prov.lambda
                                   ? output.input->SampleOne(rng)
                                   : output.reference->SampleOne(rng));
        break;
      case SamplerKind::kClip: {
        for (int64_t attempt = 0;; ++attempt) {
          if (attempt >= kMaxProposalsPerDraw) {
            return absl::InternalError("rejection sampler made no progress");
          }
          std::vector<double> x = output.reference->SampleOne(rng);
          ++draws.proposals;
          if (rng.UniformOpen() * prov.b_eps < output.RatioAt(x)) {
            draws.points.push_back(std::move(x));
            break;
          }
        }
        break;
      }
    }
  }
  return draws;
}

namespace {

struct EventStats {
  double max_excess = -std::numeric_limits<double>::infinity();
  double max_ratio = 0;
  int64_t events = 0;
};

void ScoreOrderedPair(std::span<const double> q, std::span<const double> q2,
                      double e_eps, double delta, bool exhaustive,
                      EventStats& stats) {
  const int k = static_cast<int>(q.size());
  for (int i = 0; i < k; ++i) {
    if (q[i] > 0) {
      const double ratio = q2[i] > 0 ? q[i] / q2[i]
                                     : std::numeric_limits<double>::infinity();
      stats.max_ratio = std::max(stats.max_ratio, ratio);
    }
  }
  auto score = [&](double a, double a2) {
    stats.max_excess = std::max(stats.max_excess, a - e_eps * a2 - delta);
    ++stats.events;
  };
  if (exhaustive) {
    const uint32_t full = (1u << k) - 1;
    for (uint32_t mask = 1; mask < full; ++mask) {
      double a = 0;
      double a2 = 0;
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) {
          a += q[i];
          a2 += q2[i];
        }
      }
      score(a, a2);
    }
    return;
  }
  const double total = std::accumulate(q.begin(), q.end(), 0.0);
  const double total2 = std::accumulate(q2.begin(), q2.end(), 0.0);
  for (int i = 0; i < k; ++i) {
    score(q[i], q2[i]);
    score(total - q[i], total2 - q2[i]);
  }
}

}  // namespace

absl::StatusOr<LdpVerification> VerifyLdpDiscrete(
    const DiscreteMechanism& mechanism, const UniverseSpec& universe,
    double epsilon, double delta, int trials, uint64_t seed) {
  const DiscretePmf* ref = DiscreteReference(universe);
  if (ref == nullptr) {
    return absl::InvalidArgumentError("verification needs a discrete class");
  }
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  const int k = ref->size();
  LdpVerification result;
  result.exhaustive = k <= kMaxEnumeratedSupport;
  RngStream rng(seed, "verify-ldp", 0, RngPurpose::kVerificationPairs);
  const double e_eps = std::exp(epsilon);
  EventStats stats;

  auto draw_member = [&](bool extreme) -> absl::StatusOr<DiscretePmf> {
    std::vector<double> p =
        extreme ? RandomBandExtreme(ref->probs(), universe.c1, universe.c2, rng)
                : RandomBandMember(ref->probs(), universe.c1, universe.c2, rng);
    return DiscretePmf::Create(std::move(p));
  };
  for (int t = 0; t < trials; ++t) {
    absl::StatusOr<DiscretePmf> p = draw_member(t % 3 != 0);
    absl::StatusOr<DiscretePmf> p2 = draw_member(t % 3 == 2);
    if (!p.ok()) return p.status();
    if (!p2.ok()) return p2.status();
    absl::StatusOr<std::vector<double>> q = mechanism(*p);
    absl::StatusOr<std::vector<double>> q2 = mechanism(*p2);
    if (!q.ok()) return q.status();
    if (!q2.ok()) return q2.status();
    if (static_cast<int>(q->size()) != k || static_cast<int>(q2->size()) != k) {
      return absl::InvalidArgumentError("mechanism changed the support size");
    }
    ScoreOrderedPair(*q, *q2, e_eps, delta, result.exhaustive, stats);
    ScoreOrderedPair(*q2, *q, e_eps, delta, result.exhaustive, stats);
    ++result.pairs;
  }
  result.max_excess = stats.max_excess;
  result.max_pointwise_ratio = stats.max_ratio;
  result.events = stats.events;
  return result;
}

}  // namespace ldp_sampling
