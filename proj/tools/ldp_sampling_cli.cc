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

// Command-line front end: risk queries, sampler application, experiment runs
// and privacy verification.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 trivial regime (the
// identity map is already private), 3 input outside the sampler's class.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "ldp_sampling/distributions.h"
#include "ldp_sampling/divergence.h"
#include "ldp_sampling/experiments.h"
#include "ldp_sampling/numerics.h"
#include "ldp_sampling/quadrature.h"
#include "ldp_sampling/risk.h"
#include "ldp_sampling/samplers.h"
#include "ldp_sampling/serialization.h"
#include "ldp_sampling/tradeoff.h"

namespace ldp_sampling {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTrivial = 2;
constexpr int kExitMembership = 3;
constexpr char kOutputDirEnv[] = "LDP_SAMPLING_OUTPUT_DIR";
constexpr double kVerifyTolerance = 1e-9;

struct PrivacyFlags {
  double pure = NAN;
  double approx = NAN;
  double delta = 0;
  double gaussian = NAN;
  CLI::Option* pure_opt = nullptr;
  CLI::Option* approx_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* gaussian_opt = nullptr;

  void Register(CLI::App* app) {
    pure_opt = app->add_option("--pure", pure, "Pure LDP with this epsilon");
    approx_opt =
        app->add_option("--approx", approx, "Approximate LDP with this epsilon");
    delta_opt = app->add_option("--delta", delta, "Delta for --approx");
    gaussian_opt =
        app->add_option("--gaussian", gaussian, "Gaussian LDP with this nu");
    pure_opt->excludes(approx_opt)->excludes(gaussian_opt);
    approx_opt->excludes(gaussian_opt);
    delta_opt->needs(approx_opt);
  }

  absl::StatusOr<TradeoffFunction> Resolve() const {
    if (pure_opt->count() > 0) return TradeoffFunction::Pure(pure);
    if (approx_opt->count() > 0) {
      return TradeoffFunction::Approximate(approx, delta);
    }
    if (gaussian_opt->count() > 0) return TradeoffFunction::Gaussian(gaussian);
    return absl::InvalidArgumentError(
        "one of --pure, --approx or --gaussian is required");
  }
};

struct UniverseFlags {
  int k = 0;
  double c1 = NAN;
  double c2 = NAN;
  double gamma = NAN;
  bool auto_widen = false;
  CLI::Option* k_opt = nullptr;
  CLI::Option* c1_opt = nullptr;
  CLI::Option* c2_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;

  void Register(CLI::App* app) {
    k_opt = app->add_option("--k", k, "Support size; universe (0, k)");
    c1_opt = app->add_option("--c1", c1, "Lower density-ratio bound");
    c2_opt = app->add_option("--c2", c2, "Upper density-ratio bound");
    gamma_opt = app->add_option("--gamma", gamma, "Neighborhood radius");
    app->add_flag("--auto-widen", auto_widen,
                  "Lower c1 (or raise c2) until (c2-c1)/(1-c1) is an integer");
    c1_opt->needs(c2_opt);
    c2_opt->needs(c1_opt);
    k_opt->excludes(gamma_opt);
  }

  bool has_bounds() const { return c1_opt->count() > 0; }
  bool has_k() const { return k_opt->count() > 0; }
  bool has_gamma() const { return gamma_opt->count() > 0; }

  // (c1, c2) from --c1/--c2, --k or --gamma, widened when requested.
  absl::StatusOr<std::pair<double, double>> Bounds() const {
    double lo;
    double hi;
    if (has_bounds()) {
      lo = c1;
      hi = c2;
    } else if (has_gamma()) {
      lo = 1 / gamma;
      hi = gamma;
    } else if (has_k()) {
      lo = 0;
      hi = k;
    } else {
      return absl::InvalidArgumentError(
          "a universe is required: --k, --gamma or --c1/--c2");
    }
    if (auto_widen) {
      absl::StatusOr<WidenedBounds> widened = WidenToIntegral(lo, hi);
      if (!widened.ok()) return widened.status();
      if (widened->changed) {
        std::cerr << absl::StrFormat(
            "widened universe from (%.17g, %.17g) to (%.17g, %.17g)\n", lo,
            hi, widened->c1, widened->c2);
      }
      return std::make_pair(widened->c1, widened->c2);
    }
    return std::make_pair(lo, hi);
  }
};

absl::StatusOr<std::vector<FDivergence>> ParseDivergences(
    const std::string& list) {
  std::vector<FDivergence> out;
  for (absl::string_view name : absl::StrSplit(list, ',', absl::SkipEmpty())) {
    absl::StatusOr<FDivergence> f = FDivergence::FromName(std::string(name));
    if (!f.ok()) return f.status();
    out.push_back(*f);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty --div list");
  return out;
}

absl::StatusOr<std::vector<double>> ParseDoubles(const std::string& list) {
  std::vector<double> out;
  for (absl::string_view item : absl::StrSplit(list, ',', absl::SkipEmpty())) {
    double value;
    if (!absl::SimpleAtod(item, &value)) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed number '", std::string(item), "'"));
    }
    out.push_back(value);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty list");
  return out;
}

absl::StatusOr<std::vector<int>> ParseInts(const std::string& list) {
  std::vector<int> out;
  for (absl::string_view item : absl::StrSplit(list, ',', absl::SkipEmpty())) {
    int value;
    if (!absl::SimpleAtoi(item, &value)) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed integer '", std::string(item), "'"));
    }
    out.push_back(value);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty list");
  return out;
}

int ReportError(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  if (IsMembershipError(status)) return kExitMembership;
  return kExitError;
}

void LogConfig(const json& config) {
  std::cerr << "config: " << config.dump() << "\n";
}

absl::Status Emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return absl::OkStatus();
  }
  return WriteTextFile(output, text);
}

json PrivacyJson(const TradeoffFunction& g) {
  switch (g.kind()) {
    case TradeoffFunction::Kind::kPure:
      return {{"kind", "pure"}, {"epsilon", g.epsilon()}};
    case TradeoffFunction::Kind::kApproximate:
      return {{"kind", "approx"},
              {"epsilon", g.epsilon()},
              {"delta", g.delta()}};
    case TradeoffFunction::Kind::kGaussian:
      return {{"kind", "gaussian"}, {"nu", g.nu()}};
  }
  return {};
}

// risk ----------------------------------------------------------------------

struct RiskCommand {
  PrivacyFlags privacy;
  UniverseFlags universe;
  bool local = false;
  bool nonlinear = false;
  std::string divergences = "kl,tv,hellinger";
  std::string format = "csv";
  std::string output;

  void Register(CLI::App* app) {
    privacy.Register(app);
    universe.Register(app);
    app->add_flag("--local", local, "Local risk on N_gamma (needs --gamma)");
    app->add_flag("--nonlinear", nonlinear,
                  "Use the clipping sampler (local, pure only)");
    app->add_option("--div", divergences,
                    "Comma list of kl, tv, hellinger, chi2, hockey:<gamma>");
    app->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--output", output, "Output file (default stdout)");
  }

  int Run() const {
    absl::StatusOr<TradeoffFunction> g = privacy.Resolve();
    if (!g.ok()) return ReportError(g.status());
    absl::StatusOr<std::vector<FDivergence>> fs =
        ParseDivergences(divergences);
    if (!fs.ok()) return ReportError(fs.status());
    if (local && !universe.has_gamma()) {
      return ReportError(absl::InvalidArgumentError("--local needs --gamma"));
    }
    if (nonlinear && !(local && g->kind() == TradeoffFunction::Kind::kPure)) {
      return ReportError(absl::InvalidArgumentError(
          "--nonlinear needs --local and --pure"));
    }
    absl::StatusOr<std::pair<double, double>> bounds = universe.Bounds();
    if (!bounds.ok()) return ReportError(bounds.status());

    json divergence_names = json::array();
    for (const FDivergence& f : *fs) divergence_names.push_back(f.Name());
    LogConfig({{"subcommand", "risk"},
               {"privacy", PrivacyJson(*g)},
               {"c1", bounds->first},
               {"c2", bounds->second},
               {"local", local},
               {"nonlinear", nonlinear},
               {"divergences", divergence_names},
               {"format", format},
               {"output", output}});

    std::vector<RiskReport> reports;
    for (const FDivergence& f : *fs) {
      absl::StatusOr<RiskReport> report;
      if (nonlinear) {
        report = LocalRiskPure(universe.gamma, g->epsilon(), f);
      } else if (local) {
        report = LocalRiskFunctional(universe.gamma, *g, f);
      } else {
        report = MinimaxRisk(bounds->first, bounds->second, *g, f);
      }
      if (!report.ok()) return ReportError(report.status());
      reports.push_back(*std::move(report));
    }

    std::string text;
    if (format == "json") {
      json rows = json::array();
      for (const RiskReport& r : reports) rows.push_back(RiskReportToJson(r));
      text = rows.dump(2) + "\n";
    } else {
      text = "divergence,sampler,lambda_star,r1,r2,risk,trivial,c1,c2,privacy\n";
      for (const RiskReport& r : reports) {
        absl::StrAppend(&text, r.divergence, ",", r.sampler, ",",
                        FormatDouble(r.lambda_star), ",", FormatDouble(r.r1),
                        ",", FormatDouble(r.r2), ",", FormatDouble(r.risk),
                        ",", r.trivial ? "true" : "false", ",",
                        FormatDouble(r.c1), ",", FormatDouble(r.c2), ",\"",
                        r.privacy, "\"\n");
      }
    }
    if (absl::Status s = Emit(text, output); !s.ok()) return ReportError(s);
    const bool trivial = !reports.empty() && reports.front().trivial;
    if (trivial) {
      std::cerr << "notice: trivial regime; the identity sampler is already "
                   "private and the risk is 0\n";
      return kExitTrivial;
    }
    return kExitOk;
  }
};

// sample --------------------------------------------------------------------

// Chi-square upper 1% critical value by the Wilson-Hilferty approximation.
double ChiSquareCritical99(int dof) {
  const double z = 2.3263478740408408;
  const double a = 2.0 / (9.0 * dof);
  const double t = 1 - a + z * std::sqrt(a);
  return dof * t * t * t;
}

struct SampleCommand {
  PrivacyFlags privacy;
  UniverseFlags universe;
  std::string input;
  bool nonlinear = false;
  int count = 1;
  uint64_t seed = 0;
  int points = 0;
  double ref_scale = NAN;
  bool chi2 = false;
  std::string output;

  void Register(CLI::App* app) {
    privacy.Register(app);
    universe.Register(app);
    app->add_option("--input", input, "pmf or mixture JSON file")->required();
    app->add_flag("--nonlinear", nonlinear, "Clipping sampler (pure only)");
    app->add_option("--count", count, "Number of draws")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed);
    app->add_option("--points", points, "Quadrature points per axis");
    app->add_option("--ref-scale", ref_scale,
                    "Scale of the Laplace reference (default: input scale)");
    app->add_flag("--chi2", chi2, "Chi-square self-test of discrete draws");
    app->add_option("--output", output, "Output JSON file (default stdout)");
  }

  int Run() const {
    absl::StatusOr<TradeoffFunction> g = privacy.Resolve();
    if (!g.ok()) return ReportError(g.status());
    absl::StatusOr<std::string> text = ReadTextFile(input);
    if (!text.ok()) return ReportError(text.status());
    absl::StatusOr<json> parsed = ParseJson(*text);
    if (!parsed.ok()) return ReportError(parsed.status());
    absl::StatusOr<std::variant<DiscretePmf, LaplaceMixture>> dist =
        DistributionFromJson(*parsed);
    if (!dist.ok()) return ReportError(dist.status());
    if (nonlinear && g->kind() != TradeoffFunction::Kind::kPure) {
      return ReportError(
          absl::InvalidArgumentError("--nonlinear needs --pure"));
    }

    Reference reference = DiscretePmf::Uniform(2);
    QuadratureConfig grid;
    if (const auto* pmf = std::get_if<DiscretePmf>(&*dist)) {
      reference = DiscretePmf::Uniform(pmf->size());
    } else {
      const LaplaceMixture& mixture = std::get<LaplaceMixture>(*dist);
      const double scale =
          std::isnan(ref_scale) ? mixture.scale() : ref_scale;
      reference = LaplaceMixture::Centered(mixture.dim(), scale);
      grid = QuadratureConfig::ForScale(mixture.dim(), scale, points);
    }

    absl::StatusOr<SamplerOutput> out;
    if (universe.has_gamma() && !universe.has_bounds()) {
      absl::StatusOr<Neighborhood> nb =
          Neighborhood::Create(reference, universe.gamma);
      if (!nb.ok()) return ReportError(nb.status());
      LocalSamplerSpec spec;
      spec.kind = nonlinear ? LocalSamplerKind::kNonLinearPure
                            : LocalSamplerKind::kLinearFunctional;
      spec.privacy = *g;
      LogResolved(*g, 1 / universe.gamma, universe.gamma, grid);
      if (const auto* pmf = std::get_if<DiscretePmf>(&*dist)) {
        out = LocalApply(spec, *nb, *pmf);
      } else {
        out = LocalApply(spec, *nb, std::get<LaplaceMixture>(*dist), grid);
      }
    } else {
      std::pair<double, double> bounds;
      if (universe.has_bounds() || universe.auto_widen) {
        absl::StatusOr<std::pair<double, double>> b = universe.Bounds();
        if (!b.ok()) return ReportError(b.status());
        bounds = *b;
      } else if (const auto* pmf = std::get_if<DiscretePmf>(&*dist)) {
        bounds = {0.0, static_cast<double>(pmf->size())};
      } else {
        return ReportError(absl::InvalidArgumentError(
            "continuous inputs need --gamma or --c1/--c2"));
      }
      absl::StatusOr<UniverseSpec> spec =
          UniverseSpec::Create(bounds.first, bounds.second, reference);
      if (!spec.ok()) return ReportError(spec.status());
      LogResolved(*g, bounds.first, bounds.second, grid);
      if (nonlinear) {
        absl::StatusOr<ClipSampler> s = ClipSampler::Global(*spec, g->epsilon());
        if (!s.ok()) return ReportError(s.status());
        out = std::holds_alternative<DiscretePmf>(*dist)
                  ? s->Apply(std::get<DiscretePmf>(*dist))
                  : s->Apply(std::get<LaplaceMixture>(*dist), grid);
      } else {
        absl::StatusOr<LinearSampler> s = LinearSampler::Create(*spec, *g);
        if (!s.ok()) return ReportError(s.status());
        out = std::holds_alternative<DiscretePmf>(*dist)
                  ? s->Apply(std::get<DiscretePmf>(*dist))
                  : s->Apply(std::get<LaplaceMixture>(*dist), grid);
      }
    }
    if (!out.ok()) return ReportError(out.status());

    absl::StatusOr<Draws> draws = Draw(*out, seed, count);
    if (!draws.ok()) return ReportError(draws.status());
    json result{{"output", SamplerOutputToJson(*out)}, {"seed", seed}};
    if (out->is_discrete()) {
      result["draws"] = draws->indices;
      if (chi2) result["chi2"] = ChiSquareReport(*out, *draws);
    } else {
      result["draws"] = draws->points;
      result["proposals"] = draws->proposals;
    }
    if (absl::Status s = Emit(result.dump(2) + "\n", output); !s.ok()) {
      return ReportError(s);
    }
    return kExitOk;
  }

  void LogResolved(const TradeoffFunction& g, double c1, double c2,
                   const QuadratureConfig& grid) const {
    json config{{"subcommand", "sample"},
                {"input", input},
                {"privacy", PrivacyJson(g)},
                {"c1", c1},
                {"c2", c2},
                {"nonlinear", nonlinear},
                {"count", count},
                {"seed", seed},
                {"output", output}};
    if (!grid.bounds_per_axis.empty()) {
      config["quadrature"] = QuadratureConfigToJson(grid);
    }
    LogConfig(config);
  }

  static json ChiSquareReport(const SamplerOutput& out, const Draws& draws) {
    std::vector<double> counts(out.masses.size(), 0);
    for (int i : draws.indices) counts[i] += 1;
    const double n = static_cast<double>(draws.indices.size());
    double statistic = 0;
    int cells = 0;
    for (size_t i = 0; i < counts.size(); ++i) {
      const double expected = n * out.masses[i];
      if (expected <= 0) continue;
      statistic += (counts[i] - expected) * (counts[i] - expected) / expected;
      ++cells;
    }
    const int dof = std::max(cells - 1, 1);
    const double critical = ChiSquareCritical99(dof);
    return {{"statistic", statistic},
            {"dof", dof},
            {"critical_1pct", critical},
            {"pass", statistic <= critical}};
  }
};

// experiment ----------------------------------------------------------------

struct ExperimentCommand {
  std::string id;
  std::string ks;
  std::string grid;
  std::string divergences;
  uint64_t seed = 0;
  int clients = 0;
  int points = 0;
  int threads = 0;
  std::string output;
  CLI::Option* seed_opt = nullptr;

  void Register(CLI::App* app) {
    app->add_option("id", id, "Experiment id")->required();
    app->add_option("--k", ks, "Comma list of support sizes (finite runs)");
    app->add_option("--grid", grid, "Comma list of epsilon or nu values");
    app->add_option("--div", divergences, "Comma list of divergences");
    seed_opt = app->add_option("--seed", seed);
    app->add_option("--clients", clients)->check(CLI::PositiveNumber);
    app->add_option("--points", points, "Quadrature points per axis")
        ->check(CLI::PositiveNumber);
    app->add_option("--threads", threads)->check(CLI::NonNegativeNumber);
    app->add_option("--output", output,
                    absl::StrCat("Output directory (default $", kOutputDirEnv,
                                 " or .)"));
  }

  int Run() const {
    absl::StatusOr<ExperimentConfig> config = DefaultExperimentConfig(id);
    if (!config.ok()) return ReportError(config.status());
    if (!ks.empty()) {
      absl::StatusOr<std::vector<int>> parsed = ParseInts(ks);
      if (!parsed.ok()) return ReportError(parsed.status());
      config->ks = *parsed;
    }
    if (!grid.empty()) {
      absl::StatusOr<std::vector<double>> parsed = ParseDoubles(grid);
      if (!parsed.ok()) return ReportError(parsed.status());
      config->privacy_grid = *parsed;
    }
    if (!divergences.empty()) {
      absl::StatusOr<std::vector<FDivergence>> parsed =
          ParseDivergences(divergences);
      if (!parsed.ok()) return ReportError(parsed.status());
      config->divergences = *parsed;
    }
    if (seed_opt->count() > 0) config->seed = seed;
    if (clients > 0) config->clients = clients;
    if (threads > 0) config->threads = threads;
    if (points > 0 && !config->quadrature.bounds_per_axis.empty()) {
      config->quadrature.points_per_axis = points;
    }
    std::string directory = output;
    if (directory.empty()) {
      const char* env = std::getenv(kOutputDirEnv);
      directory = (env != nullptr && *env != '\0') ? env : ".";
    }
    json logged = ExperimentConfigToJson(*config);
    logged["subcommand"] = "experiment";
    logged["output"] = directory;
    LogConfig(logged);

    absl::StatusOr<ExperimentResult> result = RunExperiment(*config);
    if (!result.ok()) return ReportError(result.status());
    absl::StatusOr<std::vector<std::string>> files =
        WriteExperimentOutputs(*result, directory);
    if (!files.ok()) return ReportError(files.status());
    for (const std::string& flag : result->flags) {
      std::cerr << "flag: " << flag << "\n";
    }
    for (const std::string& file : *files) std::cout << file << "\n";
    return kExitOk;
  }
};

// verify --------------------------------------------------------------------

struct VerifyCommand {
  PrivacyFlags privacy;
  int k = 6;
  double gamma = NAN;
  double lambda = NAN;
  bool nonlinear = false;
  int trials = 200;
  uint64_t seed = 0;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;

  void Register(CLI::App* app) {
    privacy.Register(app);
    app->add_option("--k", k, "Support size")->check(CLI::Range(2, 64));
    gamma_opt = app->add_option("--gamma", gamma,
                                "Check the class N_gamma(uniform) instead of "
                                "all pmfs");
    lambda_opt = app->add_option("--lambda", lambda,
                                 "Linear sampler weight (default lambda*)");
    app->add_flag("--nonlinear", nonlinear, "Clipping sampler (pure only)");
    app->add_option("--trials", trials)->check(CLI::PositiveNumber);
    app->add_option("--seed", seed);
  }

  int Run() const {
    absl::StatusOr<TradeoffFunction> g = privacy.Resolve();
    if (!g.ok()) return ReportError(g.status());
    if (g->kind() == TradeoffFunction::Kind::kGaussian) {
      return ReportError(absl::InvalidArgumentError(
          "verification checks (epsilon, delta) guarantees only"));
    }
    UniverseSpec universe = UniverseSpec::AllPmfs(k);
    if (gamma_opt->count() > 0) {
      absl::StatusOr<UniverseSpec> u =
          UniverseSpec::Create(1 / gamma, gamma, DiscretePmf::Uniform(k));
      if (!u.ok()) return ReportError(u.status());
      universe = *u;
    }
    DiscreteMechanism mechanism;
    std::string sampler_name;
    if (nonlinear) {
      if (g->delta() != 0) {
        return ReportError(
            absl::InvalidArgumentError("--nonlinear needs --pure"));
      }
      absl::StatusOr<ClipSampler> s =
          gamma_opt->count() > 0
              ? ClipSampler::Local(
                    *Neighborhood::Create(DiscretePmf::Uniform(k), gamma),
                    g->epsilon())
              : ClipSampler::Global(universe, g->epsilon());
      if (!s.ok()) return ReportError(s.status());
      mechanism = [s = *s](const DiscretePmf& p)
          -> absl::StatusOr<std::vector<double>> {
        absl::StatusOr<SamplerOutput> out = s.Apply(p);
        if (!out.ok()) return out.status();
        return out->masses;
      };
      sampler_name = "clip";
    } else {
      absl::StatusOr<LinearSampler> s =
          lambda_opt->count() > 0
              ? LinearSampler::WithLambda(universe, *g, lambda)
              : LinearSampler::Create(universe, *g);
      if (!s.ok()) return ReportError(s.status());
      mechanism = [s = *s](const DiscretePmf& p)
          -> absl::StatusOr<std::vector<double>> {
        absl::StatusOr<SamplerOutput> out = s.Apply(p);
        if (!out.ok()) return out.status();
        return out->masses;
      };
      sampler_name = absl::StrFormat("linear(lambda=%.17g)", s->lambda());
    }
    LogConfig({{"subcommand", "verify"},
               {"privacy", PrivacyJson(*g)},
               {"k", k},
               {"c1", universe.c1},
               {"c2", universe.c2},
               {"sampler", sampler_name},
               {"trials", trials},
               {"seed", seed}});
    absl::StatusOr<LdpVerification> v = VerifyLdpDiscrete(
        mechanism, universe, g->epsilon(), g->delta(), trials, seed);
    if (!v.ok()) return ReportError(v.status());
    const bool pass = v->max_excess <= kVerifyTolerance;
    json report{{"sampler", sampler_name},
                {"max_excess", v->max_excess},
                {"max_pointwise_ratio", v->max_pointwise_ratio},
                {"pairs", v->pairs},
                {"events", v->events},
                {"exhaustive", v->exhaustive},
                {"pass", pass}};
    std::cout << report.dump(2) << "\n";
    return pass ? kExitOk : kExitError;
  }
};

int Main(int argc, char** argv) {
  CLI::App app{"Locally private sampling: risks, samplers and experiments"};
  app.require_subcommand(1);

  RiskCommand risk;
  risk.Register(app.add_subcommand("risk", "Minimax risk queries"));
  SampleCommand sample;
  sample.Register(app.add_subcommand("sample", "Privatize and draw"));
  ExperimentCommand experiment;
  experiment.Register(app.add_subcommand("experiment", "Run an experiment"));
  VerifyCommand verify;
  verify.Register(app.add_subcommand("verify", "Check LDP on random pairs"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  if (app.got_subcommand("risk")) return risk.Run();
  if (app.got_subcommand("sample")) return sample.Run();
  if (app.got_subcommand("experiment")) return experiment.Run();
  if (app.got_subcommand("verify")) return verify.Run();
  return kExitError;
}

}  // namespace
}  // namespace ldp_sampling

int main(int argc, char** argv) { return ldp_sampling::Main(argc, argv); }
