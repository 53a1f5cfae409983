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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "absl/strings/str_format.h"
#include "ldp_sampling/distributions.h"
#include "ldp_sampling/divergence.h"
#include "ldp_sampling/experiments.h"
#include "ldp_sampling/numerics.h"
#include "ldp_sampling/risk.h"
#include "ldp_sampling/samplers.h"
#include "ldp_sampling/serialization.h"
#include "ldp_sampling/tradeoff.h"
#include "oracles.h"

namespace ldp_sampling {
namespace {

// Pinned tolerances.
constexpr double kLambdaTol = 1e-8;
constexpr double kConjugateTol = 1e-5;
constexpr double kGlobalKlTol = 1e-9;
constexpr double kLocalKlTarget = 1.016380;
constexpr double kLocalKlTol = 1e-4;
constexpr double kVerifyTol = 1e-9;
constexpr double kDominanceMargin = -1e-9;
constexpr double kAttainmentTol = 1e-6;
constexpr double kBoundSlack = 1e-4;
constexpr double kOracleSlack = 1e-6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<FDivergence>& ThreeDivergences() {
  static const auto* const kDivs = new std::vector<FDivergence>{
      FDivergence::Kl(), FDivergence::TotalVariation(),
      FDivergence::SquaredHellinger()};
  return *kDivs;
}

DiscreteMechanism AsMechanism(std::function<absl::StatusOr<SamplerOutput>(
                                  const DiscretePmf&)> apply) {
  return [apply](const DiscretePmf& p) -> absl::StatusOr<std::vector<double>> {
    absl::StatusOr<SamplerOutput> out = apply(p);
    if (!out.ok()) return out.status();
    return out->masses;
  };
}

Outcome Fail(const std::string& detail) { return {false, detail}; }

// 1 ---------------------------------------------------------------------------
Outcome LambdaAgreement() {
  RngStream rng(1, "acceptance-lambda", 0, RngPurpose::kTestInputs);
  double worst = 0;
  int pure = 0;
  int approx = 0;
  while (pure + approx < 200) {
    const bool want_approx = approx < pure;
    // Valid universes have integral multiplicity K = (c2 - c1) / (1 - c1).
    const double c1 = rng.UniformOpen() < 0.2 ? 0 : 0.9 * rng.UniformOpen();
    const int multiplicity = 2 + static_cast<int>(99 * rng.UniformOpen());
    const double c2 = c1 + multiplicity * (1 - c1);
    const double eps = 0.01 + 5 * rng.UniformOpen();
    const double boundary =
        (c2 - c1 * std::exp(eps)) * (1 - c1) / (c2 - c1);
    if (!(boundary > 0)) continue;
    const double delta =
        want_approx ? std::min(boundary, 1.0) * rng.UniformOpen() : 0;
    absl::StatusOr<LambdaStar> closed =
        want_approx ? LambdaStarApprox(c1, c2, eps, delta)
                    : LambdaStarPure(c1, c2, eps);
    if (!closed.ok()) return Fail(std::string(closed.status().message()));
    if (closed->trivial) continue;
    absl::StatusOr<TradeoffFunction> g =
        want_approx ? TradeoffFunction::Approximate(eps, delta)
                    : TradeoffFunction::Pure(eps);
    absl::StatusOr<LambdaStar> numeric = LambdaStarFunctional(c1, c2, *g);
    if (!numeric.ok()) return Fail(std::string(numeric.status().message()));
    if (numeric->trivial) {
      return Fail(absl::StrFormat("numeric trivial at c1=%g c2=%g %s", c1, c2,
                                  g->DebugString()));
    }
    worst = std::max(worst, std::abs(numeric->value - closed->value));
    (want_approx ? approx : pure) += 1;
  }
  return {worst <= kLambdaTol,
          absl::StrFormat("200 configs (%d pure, %d approx), max |diff| = %.3g",
                          pure, approx, worst)};
}

// 2 ---------------------------------------------------------------------------
Outcome ConjugateOracle() {
  RngStream rng(1, "acceptance-conjugate", 0, RngPurpose::kTestInputs);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    absl::StatusOr<TradeoffFunction> g;
    switch (i % 3) {
      case 0:
        g = TradeoffFunction::Pure(0.01 + 4 * rng.UniformOpen());
        break;
      case 1:
        g = TradeoffFunction::Approximate(0.01 + 4 * rng.UniformOpen(),
                                          0.5 * rng.UniformOpen());
        break;
      default:
        g = TradeoffFunction::Gaussian(0.05 + 4 * rng.UniformOpen());
        break;
    }
    const double beta = 8 * rng.UniformOpen();
    const double diff = std::abs(g->ConjugateAtNegExp(beta) -
                                 testing::BruteForceConjugate(*g, beta));
    worst = std::max(worst, diff);
  }
  return {worst <= kConjugateTol,
          absl::StrFormat("100 cases, max |diff| = %.3g", worst)};
}

// 3, 4 ------------------------------------------------------------------------
using RowKey = std::tuple<std::string, double, std::string>;

absl::StatusOr<std::map<RowKey, std::pair<double, double>>> LocalGlobalPairs(
    const std::vector<ResultRow>& rows) {
  std::map<RowKey, std::pair<double, double>> pairs;
  for (const ResultRow& row : rows) {
    auto& entry = pairs[{row.experiment_id, row.privacy_param, row.divergence}];
    (row.sampler == "local" ? entry.first : entry.second) = row.value;
  }
  return pairs;
}

Outcome FiniteTables() {
  absl::StatusOr<ExperimentResult> r =
      RunExperiment(*DefaultExperimentConfig("finite-pure"));
  if (!r.ok()) return Fail(std::string(r.status().message()));
  int violations = 0;
  const auto pairs = *LocalGlobalPairs(r->rows);
  for (const auto& [key, lg] : pairs) {
    if (!(lg.first < lg.second)) ++violations;
  }
  const double global_kl =
      MinimaxRisk(0, 20, *TradeoffFunction::Pure(1), FDivergence::Kl())->risk;
  const double expected_global = std::log(1 + 19 * std::exp(-1.0));
  const double local_kl = LocalRiskPure(9, 1, FDivergence::Kl())->risk;
  const bool pass = violations == 0 &&
                    std::abs(global_kl - expected_global) <= kGlobalKlTol &&
                    std::abs(local_kl - kLocalKlTarget) <= kLocalKlTol;
  return {pass, absl::StrFormat(
                    "%d rows, %d ordering violations; global KL %.12f "
                    "(target %.12f); local KL %.12f (target %.6f +- %g)",
                    pairs.size(), violations, global_kl, expected_global,
                    local_kl, kLocalKlTarget, kLocalKlTol)};
}

Outcome GldpTables() {
  absl::StatusOr<ExperimentResult> r =
      RunExperiment(*DefaultExperimentConfig("finite-gldp"));
  if (!r.ok()) return Fail(std::string(r.status().message()));
  int violations = 0;
  const auto pairs = *LocalGlobalPairs(r->rows);
  for (const auto& [key, lg] : pairs) {
    if (!(lg.first <= lg.second)) ++violations;
  }
  return {violations == 0,
          absl::StrFormat("%d rows, %d ordering violations", pairs.size(),
                          violations)};
}

// 5 ---------------------------------------------------------------------------
Outcome Verification() {
  const int k = 6;
  const UniverseSpec all = UniverseSpec::AllPmfs(k);
  std::string detail;
  bool pass = true;
  auto record = [&](const char* name, const absl::StatusOr<LdpVerification>& v) {
    if (!v.ok()) {
      pass = false;
      detail += absl::StrFormat("%s: %s; ", name, v.status().message());
      return;
    }
    pass = pass && v->max_excess <= kVerifyTol && v->exhaustive;
    detail += absl::StrFormat("%s excess %.3g over %d pairs; ", name,
                              v->max_excess, v->pairs);
  };

  const LinearSampler pure =
      *LinearSampler::Create(all, *TradeoffFunction::Pure(1));
  record("(a) linear pure",
         VerifyLdpDiscrete(
             AsMechanism([&](const DiscretePmf& p) { return pure.Apply(p); }),
             all, 1, 0, 200, 1));

  const LinearSampler approx =
      *LinearSampler::Create(all, *TradeoffFunction::Approximate(1, 0.1));
  record("(b) linear approx",
         VerifyLdpDiscrete(AsMechanism([&](const DiscretePmf& p) {
                             return approx.Apply(p);
                           }),
                           all, 1, 0.1, 200, 2));

  const Neighborhood nb = *Neighborhood::Create(DiscretePmf::Uniform(k), 3);
  const ClipSampler clip = *ClipSampler::Local(nb, 1);
  record("(c) local clip",
         VerifyLdpDiscrete(
             AsMechanism([&](const DiscretePmf& p) { return clip.Apply(p); }),
             *nb.AsUniverse(), 1, 0, 200, 3));
  return {pass, detail};
}

// 6 ---------------------------------------------------------------------------
Outcome Dominance() {
  const std::vector<double> privacy = {0.1, 0.5, 1, 2};
  double worst = INFINITY;
  int comparisons = 0;

  const int k = 20;
  const double gamma = 9;
  const Neighborhood nb = *Neighborhood::Create(DiscretePmf::Uniform(k), gamma);
  const std::vector<double> ref = DiscretePmf::Uniform(k).probs();
  RngStream rng(1, "acceptance-dominance", 0, RngPurpose::kTestInputs);
  for (int t = 0; t < 100; ++t) {
    const double eps = privacy[t % privacy.size()];
    const std::vector<double> probs =
        t % 2 == 0 ? RandomBandMember(ref, 1 / gamma, gamma, rng)
                   : RandomBandExtreme(ref, 1 / gamma, gamma, rng);
    const DiscretePmf p = *DiscretePmf::Create(probs);
    absl::StatusOr<SamplerOutput> clip = ClipSampler::Local(nb, eps)->Apply(p);
    absl::StatusOr<SamplerOutput> linear =
        LinearSampler::Create(*nb.AsUniverse(), *TradeoffFunction::Pure(eps))
            ->Apply(p);
    if (!clip.ok() || !linear.ok()) return Fail("discrete sampler failed");
    for (const FDivergence& f : ThreeDivergences()) {
      worst = std::min(worst, linear->DivergenceFromInput(f) -
                                  clip->DivergenceFromInput(f));
      ++comparisons;
    }
  }

  const LaplaceMixture h = LaplaceMixture::Centered(1, 1);
  const Neighborhood cnb = *Neighborhood::Create(h, 3);
  const QuadratureConfig config = QuadratureConfig::ForScale(1, 1);
  auto grid = std::make_shared<const QuadratureGrid>(
      *QuadratureGrid::Create(config));
  RngStream mixture_rng(1, "acceptance-dominance", 1,
                        RngPurpose::kMixtureGeneration);
  int accepted = 0;
  int generated = 0;
  while (accepted < 20) {
    if (++generated > 2000) return Fail("too many mixture regenerations");
    absl::StatusOr<LaplaceMixture> p =
        GenerateRandomMixture(MixtureGenConfig{}, mixture_rng);
    if (!p.ok()) return Fail(std::string(p.status().message()));
    if (!*NeighborhoodContains(cnb, *p, config)) continue;
    const double eps = privacy[accepted % privacy.size()];
    absl::StatusOr<GridPair> pair = GridPair::Create(*p, h, grid);
    if (!pair.ok()) return Fail(std::string(pair.status().message()));
    absl::StatusOr<SamplerOutput> clip =
        ClipSampler::Local(cnb, eps)->Apply(*pair);
    absl::StatusOr<SamplerOutput> linear =
        LinearSampler::Create(*cnb.AsUniverse(), *TradeoffFunction::Pure(eps))
            ->Apply(*pair);
    if (!clip.ok() || !linear.ok()) return Fail("continuous sampler failed");
    for (const FDivergence& f : ThreeDivergences()) {
      worst = std::min(worst, linear->DivergenceFromInput(f) -
                                  clip->DivergenceFromInput(f));
      ++comparisons;
    }
    ++accepted;
  }
  return {worst >= kDominanceMargin,
          absl::StrFormat("%d comparisons (100 discrete, 20 continuous of %d "
                          "generated), min(linear - clip) = %.3g",
                          comparisons, generated, worst)};
}

// 7 ---------------------------------------------------------------------------
Outcome Attainment() {
  const int k = 20;
  const double gamma = 9;
  const double eps = 1;
  const Neighborhood nb = *Neighborhood::Create(DiscretePmf::Uniform(k), gamma);
  const ClipSampler clip = *ClipSampler::Local(nb, eps);
  // gamma / k on two cells and 1 / (gamma k) on the rest has mass one.
  std::vector<double> extreme(k, 1 / (gamma * k));
  extreme[0] = extreme[1] = gamma / k;
  absl::StatusOr<SamplerOutput> out = clip.Apply(*DiscretePmf::Create(extreme));
  if (!out.ok()) return Fail(std::string(out.status().message()));

  double worst_gap = 0;
  std::vector<double> bound;
  for (const FDivergence& f : ThreeDivergences()) {
    const double risk = LocalRiskPure(gamma, eps, f)->risk;
    bound.push_back(risk);
    worst_gap =
        std::max(worst_gap, std::abs(out->DivergenceFromInput(f) - risk));
  }

  const std::vector<double> ref = DiscretePmf::Uniform(k).probs();
  RngStream rng(1, "acceptance-attainment", 0, RngPurpose::kTestInputs);
  int exceed = 0;
  double closest = INFINITY;
  for (int t = 0; t < 1000; ++t) {
    const std::vector<double> probs =
        t % 2 == 0 ? RandomBandMember(ref, 1 / gamma, gamma, rng)
                   : RandomBandExtreme(ref, 1 / gamma, gamma, rng);
    absl::StatusOr<SamplerOutput> o = clip.Apply(*DiscretePmf::Create(probs));
    if (!o.ok()) return Fail(std::string(o.status().message()));
    for (size_t i = 0; i < ThreeDivergences().size(); ++i) {
      const double gap =
          bound[i] - o->DivergenceFromInput(ThreeDivergences()[i]);
      closest = std::min(closest, gap);
      if (gap < -kAttainmentTol) ++exceed;
    }
  }
  return {worst_gap <= kAttainmentTol && exceed == 0,
          absl::StrFormat("extreme |D - risk| = %.3g over KL/TV/H; 1000 random "
                          "P: %d exceed, min(bound - D) = %.3g",
                          worst_gap, exceed, closest)};
}

// 8, 9, 11 --------------------------------------------------------------------
struct SweepOutcomes {
  Outcome ordering;
  Outcome bound;
  absl::StatusOr<ExperimentResult> result = absl::UnknownError("not run");
};

SweepOutcomes Sweep() {
  SweepOutcomes s;
  const ExperimentConfig config = *DefaultExperimentConfig("laplace1d-pure");
  absl::StatusOr<ExperimentResult> r = RunExperiment(config);
  if (!r.ok()) {
    s.ordering = s.bound = Fail(std::string(r.status().message()));
    return s;
  }
  s.result = r;
  const auto pairs = *LocalGlobalPairs(r->rows);
  int violations = 0;
  for (const auto& [key, lg] : pairs) {
    if (!(lg.first < lg.second)) ++violations;
  }
  s.ordering = {violations == 0,
                absl::StrFormat("%d clients, %d (eps, f) rows, %d ordering "
                                "violations, %d regenerated",
                                config.clients, pairs.size(), violations,
                                r->regenerated)};

  int over = 0;
  int checked = 0;
  double tightest = INFINITY;
  for (const ResultRow& row : r->client_rows) {
    if (row.sampler != "local") continue;
    const double bound =
        LocalRiskPure(config.local_gamma, row.privacy_param,
                      *FDivergence::FromName(row.divergence))
            ->risk;
    tightest = std::min(tightest, bound - row.value);
    if (row.value > bound + kBoundSlack) ++over;
    ++checked;
  }
  s.bound = {over == 0 && checked > 0,
             absl::StrFormat("%d client values, %d above bound + %g, min(bound "
                             "- value) = %.3g",
                             checked, over, kBoundSlack, tightest)};

  return s;
}

// Reruns each experiment, the second time with a different thread count, and
// compares the CSV bytes. `first` is an earlier run of the 1-D sweep.
Outcome Determinism(const absl::StatusOr<ExperimentResult>& first) {
  if (!first.ok()) return Fail(std::string(first.status().message()));
  const ExperimentResult& sweep = *first;
  const std::filesystem::path base =
      std::filesystem::temp_directory_path() / "ldp_acceptance_determinism";
  std::filesystem::remove_all(base);
  bool identical = true;
  int files = 0;
  for (const char* id : {"finite-pure", "laplace1d-pure"}) {
    ExperimentConfig c = *DefaultExperimentConfig(id);
    std::vector<std::string> texts[2];
    for (int run = 0; run < 2; ++run) {
      // The second sweep run uses a different thread count.
      if (run == 1) c.threads = 3;
      absl::StatusOr<ExperimentResult> result =
          (run == 0 && c.id == sweep.config.id) ? first : RunExperiment(c);
      if (!result.ok()) {
        return Fail(std::string(result.status().message()));
      }
      const std::string dir = (base / std::to_string(run)).string();
      absl::StatusOr<std::vector<std::string>> paths =
          WriteExperimentOutputs(*result, dir);
      if (!paths.ok()) {
        return Fail(std::string(paths.status().message()));
      }
      for (const std::string& path : *paths) {
        if (path.ends_with(".csv")) texts[run].push_back(*ReadTextFile(path));
      }
    }
    identical = identical && texts[0] == texts[1] && !texts[0].empty();
    files += static_cast<int>(texts[0].size());
  }
  std::filesystem::remove_all(base);
  return {identical,
          absl::StrFormat("%d CSV files compared byte for byte", files)};
}

// 10 --------------------------------------------------------------------------
Outcome InstanceOptimality() {
  const int k = 4;
  const double gamma = 3;
  const double eps = 1;
  const Neighborhood nb = *Neighborhood::Create(DiscretePmf::Uniform(k), gamma);
  const ClipSampler clip = *ClipSampler::Local(nb, eps);
  const std::vector<double> ref = DiscretePmf::Uniform(k).probs();
  std::vector<double> lo(k);
  std::vector<double> hi(k);
  for (int i = 0; i < k; ++i) {
    lo[i] = clip.b() * ref[i];
    hi[i] = clip.b_eps() * ref[i];
  }
  RngStream rng(1, "acceptance-instance", 0, RngPurpose::kTestInputs);
  double worst = INFINITY;
  for (int t = 0; t < 50; ++t) {
    const std::vector<double> probs =
        t % 2 == 0 ? RandomBandMember(ref, 1 / gamma, gamma, rng)
                   : RandomBandExtreme(ref, 1 / gamma, gamma, rng);
    absl::StatusOr<SamplerOutput> out = clip.Apply(*DiscretePmf::Create(probs));
    if (!out.ok()) return Fail(std::string(out.status().message()));
    for (const FDivergence& f : ThreeDivergences()) {
      const double brute = testing::BruteForceBandMinimum(f, probs, lo, hi);
      worst = std::min(worst, brute - out->DivergenceFromInput(f));
    }
  }
  return {worst >= -kOracleSlack,
          absl::StrFormat("50 P x 3 divergences, min(brute - clip) = %.3g",
                          worst)};
}

int Main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  SweepOutcomes sweep;
  bool sweep_done = false;
  auto sweep_part = [&](Outcome SweepOutcomes::*member) {
    return [&, member] {
      if (!sweep_done) {
        sweep = Sweep();
        sweep_done = true;
      }
      return sweep.*member;
    };
  };
  const std::vector<Criterion> criteria = {
      {1, "closed-form lambda* agreement", 5, LambdaAgreement},
      {2, "conjugate oracle", 5, ConjugateOracle},
      {3, "finite-space tables", 1, FiniteTables},
      {4, "GLDP finite tables", 10, GldpTables},
      {5, "privacy certification", 30, Verification},
      {6, "pointwise dominance", 120, Dominance},
      {7, "worst-case attainment", 60, Attainment},
      {8, "continuous sweep ordering", 600,
       sweep_part(&SweepOutcomes::ordering)},
      {9, "theoretical bound respected", 600,
       sweep_part(&SweepOutcomes::bound)},
      {10, "instance-optimality oracle", 120, InstanceOptimality},
      {11, "determinism", 600, [&] { return Determinism(sweep.result); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool pass = outcome.pass && seconds <= c.budget_seconds;
    if (!pass) ++failures;
    std::printf("%s  criterion %2d  %-32s  %.2fs (budget %gs)  %s\n",
                pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.budget_seconds, outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace ldp_sampling

int main() { return ldp_sampling::Main(); }
