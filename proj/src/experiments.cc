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

#include "ldp_sampling/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <functional>
#include <memory>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "ldp_sampling/numerics.h"
#include "ldp_sampling/risk.h"
#include "ldp_sampling/samplers.h"
#include "ldp_sampling/serialization.h"
#include "ldp_sampling/tradeoff.h"

namespace ldp_sampling {
namespace {

using nlohmann::json;

constexpr char kFinitePure[] = "finite-pure";
constexpr char kFiniteGldp[] = "finite-gldp";
constexpr char kLaplace1dPure[] = "laplace1d-pure";
constexpr char kLaplace1dGldp[] = "laplace1d-gldp";
constexpr char kLaplaceNdPure[] = "laplacend-pure";
constexpr char kVisual[] = "visual";

std::vector<FDivergence> DefaultDivergences() {
  return {FDivergence::Kl(), FDivergence::TotalVariation(),
          FDivergence::SquaredHellinger()};
}

absl::StatusOr<TradeoffFunction> PrivacyFor(const ExperimentConfig& config,
                                            double value) {
  return config.is_pure() ? TradeoffFunction::Pure(value)
                          : TradeoffFunction::Gaussian(value);
}

absl::Status ValidateCommon(const ExperimentConfig& config) {
  if (config.privacy_grid.empty()) {
    return absl::InvalidArgumentError("privacy grid is empty");
  }
  if (config.divergences.empty()) {
    return absl::InvalidArgumentError("divergence list is empty");
  }
  return absl::OkStatus();
}

void FlagOrdering(const std::string& label, double local, double global,
                  std::vector<std::string>& flags) {
  if (!(local < global)) {
    flags.push_back(absl::StrFormat("%s: local %.17g >= global %.17g", label,
                                    local, global));
  }
}

int WorkerCount(const ExperimentConfig& config, int jobs) {
  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(threads, 1, std::max(jobs, 1));
}

// Runs job(i) for i in [0, n) on a small pool; job results must be stored by
// index so the outcome does not depend on scheduling.
void ParallelFor(int n, int threads, const std::function<void(int)>& job) {
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) job(i);
    });
  }
  for (std::thread& thread : pool) thread.join();
}

using GridSampler =
    std::function<absl::StatusOr<SamplerOutput>(const GridPair&)>;

struct SweepSamplers {
  GridSampler local;
  GridSampler global;
};

absl::StatusOr<SweepSamplers> MakeSweepSamplers(const ExperimentConfig& config,
                                                const LaplaceMixture& h,
                                                double value) {
  absl::StatusOr<UniverseSpec> local_universe =
      UniverseSpec::Create(1 / config.local_gamma, config.local_gamma, h);
  if (!local_universe.ok()) return local_universe.status();
  absl::StatusOr<UniverseSpec> global_universe =
      UniverseSpec::Create(config.global_c1, config.global_c2, h);
  if (!global_universe.ok()) return global_universe.status();
  if (absl::Status s = local_universe->CheckIntegral(); !s.ok()) return s;
  if (absl::Status s = global_universe->CheckIntegral(); !s.ok()) return s;

  SweepSamplers samplers;
  if (config.is_pure()) {
    absl::StatusOr<Neighborhood> nb =
        Neighborhood::Create(h, config.local_gamma);
    if (!nb.ok()) return nb.status();
    absl::StatusOr<ClipSampler> local = ClipSampler::Local(*nb, value);
    if (!local.ok()) return local.status();
    absl::StatusOr<ClipSampler> global =
        ClipSampler::Global(*global_universe, value);
    if (!global.ok()) return global.status();
    samplers.local = [s = *local](const GridPair& p) { return s.Apply(p); };
    samplers.global = [s = *global](const GridPair& p) { return s.Apply(p); };
    return samplers;
  }
  absl::StatusOr<TradeoffFunction> g = TradeoffFunction::Gaussian(value);
  if (!g.ok()) return g.status();
  absl::StatusOr<LinearSampler> local =
      LinearSampler::Create(*local_universe, *g);
  if (!local.ok()) return local.status();
  absl::StatusOr<LinearSampler> global =
      LinearSampler::Create(*global_universe, *g);
  if (!global.ok()) return global.status();
  samplers.local = [s = *local](const GridPair& p) { return s.Apply(p); };
  samplers.global = [s = *global](const GridPair& p) { return s.Apply(p); };
  return samplers;
}

QuadratureConfig SweepQuadrature(const ExperimentConfig& config) {
  if (!config.quadrature.bounds_per_axis.empty()) return config.quadrature;
  return QuadratureConfig::ForScale(config.mixture.dim, config.mixture.scale);
}

std::vector<double> WindowNodes(double lo, double hi, int n) {
  std::vector<double> nodes(n);
  for (int i = 0; i < n; ++i) {
    nodes[i] = (i == n - 1) ? hi : lo + i * (hi - lo) / (n - 1);
  }
  return nodes;
}

absl::StatusOr<DensityGrid> RenderWindow(
    const std::string& name, const ExperimentConfig& config,
    const std::function<double(std::span<const double>)>& density,
    double solver_mass) {
  DensityGrid grid;
  grid.name = name;
  grid.lo = -config.visual_half_width;
  grid.hi = config.visual_half_width;
  grid.points = config.visual_points;
  grid.solver_mass = solver_mass;
  const std::vector<double> nodes =
      WindowNodes(grid.lo, grid.hi, grid.points);
  const double h = (grid.hi - grid.lo) / (grid.points - 1);
  grid.values.resize(static_cast<size_t>(grid.points) * grid.points);
  double mass = 0;
  double x[2];
  for (int iy = 0; iy < grid.points; ++iy) {
    for (int ix = 0; ix < grid.points; ++ix) {
      x[0] = nodes[ix];
      x[1] = nodes[iy];
      const double value = density(x);
      grid.values[static_cast<size_t>(iy) * grid.points + ix] = value;
      const double wx = (ix == 0 || ix == grid.points - 1) ? 0.5 : 1.0;
      const double wy = (iy == 0 || iy == grid.points - 1) ? 0.5 : 1.0;
      mass += wx * wy * h * h * value;
    }
  }
  grid.window_mass = mass;
  return grid;
}

// Integral of RatioAt * h over the solver grid.
double AnalyticMass(const SamplerOutput& out) {
  const QuadratureGrid& grid = *out.grid;
  std::vector<double> x(grid.dim());
  double mass = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    grid.Point(i, x);
    mass += grid.Weight(i) * out.DensityAt(x);
  }
  return mass;
}

}  // namespace

bool ExperimentConfig::is_pure() const {
  return id.find("gldp") == std::string::npos;
}

std::vector<std::string> ExperimentIds() {
  return {kFinitePure,     kFiniteGldp,    kLaplace1dPure,
          kLaplace1dGldp, kLaplaceNdPure, kVisual};
}

absl::StatusOr<ExperimentConfig> DefaultExperimentConfig(
    const std::string& id) {
  ExperimentConfig config;
  config.id = id;
  config.privacy_grid = {0.1, 0.5, 1, 2};
  config.divergences = DefaultDivergences();
  config.seed = 1;
  if (id == kFinitePure || id == kFiniteGldp) {
    config.ks = {10, 20, 100};
    return config;
  }
  if (id == kLaplace1dPure || id == kLaplace1dGldp || id == kLaplaceNdPure) {
    config.mixture = MixtureGenConfig{10, 2, id == kLaplaceNdPure ? 2 : 1, 1};
    config.quadrature = QuadratureConfig::ForScale(config.mixture.dim, 1);
    return config;
  }
  if (id == kVisual) {
    config.privacy_grid = {1};
    config.mixture = MixtureGenConfig{4, 2, 2, 2};
    config.local_gamma = 2;
    config.global_c1 = 1.0 / 6;
    config.global_c2 = 6;
    config.quadrature = QuadratureConfig::Box(2, 30, 1024);
    return config;
  }
  return absl::NotFoundError(absl::StrFormat("unknown experiment id '%s'", id));
}

absl::StatusOr<ExperimentResult> RunFinite(const ExperimentConfig& config) {
  if (absl::Status s = ValidateCommon(config); !s.ok()) return s;
  if (config.ks.empty()) return absl::InvalidArgumentError("no k values");
  ExperimentResult result;
  result.config = config;
  for (int k : config.ks) {
    if (k % 2 != 0 || k < 6) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "k must be even and >= 6 so that gamma = k/2 - 1 > 1, got %d", k));
    }
    const double gamma = k / 2 - 1;
    const std::string row_id = absl::StrFormat("%s/k=%d", config.id, k);
    for (double value : config.privacy_grid) {
      absl::StatusOr<TradeoffFunction> g = PrivacyFor(config, value);
      if (!g.ok()) return g.status();
      for (const FDivergence& f : config.divergences) {
        absl::StatusOr<RiskReport> local =
            config.is_pure() ? LocalRiskPure(gamma, value, f)
                             : LocalRiskFunctional(gamma, *g, f);
        if (!local.ok()) return local.status();
        absl::StatusOr<RiskReport> global = MinimaxRisk(0, k, *g, f);
        if (!global.ok()) return global.status();
        result.rows.push_back(
            {row_id, value, f.Name(), "local", local->risk, -1, config.seed});
        result.rows.push_back(
            {row_id, value, f.Name(), "global", global->risk, -1, config.seed});
        FlagOrdering(absl::StrFormat("%s privacy=%g %s", row_id, value,
                                     f.Name()),
                     local->risk, global->risk, result.flags);
      }
    }
  }
  return result;
}

absl::StatusOr<ExperimentResult> RunLaplaceSweep(
    const ExperimentConfig& config) {
  if (absl::Status s = ValidateCommon(config); !s.ok()) return s;
  if (absl::Status s = config.mixture.Validate(); !s.ok()) return s;
  if (config.clients < 1) return absl::InvalidArgumentError("clients < 1");
  if (!(config.local_gamma > 1)) {
    return absl::InvalidArgumentError("local gamma must be > 1");
  }
  absl::StatusOr<QuadratureGrid> grid_or =
      QuadratureGrid::Create(SweepQuadrature(config));
  if (!grid_or.ok()) return grid_or.status();
  if (grid_or->dim() != config.mixture.dim) {
    return absl::InvalidArgumentError("quadrature and mixture dims differ");
  }
  auto grid = std::make_shared<const QuadratureGrid>(*std::move(grid_or));
  const LaplaceMixture h =
      LaplaceMixture::Centered(config.mixture.dim, config.mixture.scale);

  std::vector<SweepSamplers> samplers;
  for (double value : config.privacy_grid) {
    absl::StatusOr<SweepSamplers> s = MakeSweepSamplers(config, h, value);
    if (!s.ok()) return s.status();
    samplers.push_back(*std::move(s));
  }

  const int nv = static_cast<int>(config.privacy_grid.size());
  const int nf = static_cast<int>(config.divergences.size());
  const int budget = config.max_regeneration_factor * config.clients;
  struct ClientOutcome {
    absl::Status status;
    int regenerated = 0;
    // [privacy][divergence]
    std::vector<double> local;
    std::vector<double> global;
  };
  std::vector<ClientOutcome> outcomes(config.clients);

  ParallelFor(config.clients, WorkerCount(config, config.clients),
              [&](int client) {
    ClientOutcome& outcome = outcomes[client];
    RngStream rng(config.seed, config.id, static_cast<uint64_t>(client),
                  RngPurpose::kMixtureGeneration);
    std::optional<GridPair> pair;
    for (int attempt = 0; attempt <= budget; ++attempt) {
      absl::StatusOr<LaplaceMixture> mixture =
          GenerateRandomMixture(config.mixture, rng);
      if (!mixture.ok()) {
        outcome.status = mixture.status();
        return;
      }
      absl::StatusOr<GridPair> candidate = GridPair::Create(*mixture, h, grid);
      if (!candidate.ok()) {
        outcome.status = candidate.status();
        return;
      }
      const BandCheck check =
          CheckBand(candidate->input_masses, candidate->reference_masses,
                    1 / config.local_gamma, config.local_gamma);
      if (check.contains) {
        pair = *std::move(candidate);
        break;
      }
      ++outcome.regenerated;
    }
    if (!pair.has_value()) {
      outcome.status = absl::InvalidArgumentError(
          "mixture regeneration budget exhausted; the band is too tight");
      return;
    }
    outcome.local.assign(nv * nf, 0);
    outcome.global.assign(nv * nf, 0);
    for (int v = 0; v < nv; ++v) {
      absl::StatusOr<SamplerOutput> local = samplers[v].local(*pair);
      absl::StatusOr<SamplerOutput> global = samplers[v].global(*pair);
      if (!local.ok() || !global.ok()) {
        outcome.status = local.ok() ? global.status() : local.status();
        return;
      }
      for (int f = 0; f < nf; ++f) {
        outcome.local[v * nf + f] =
            local->DivergenceFromInput(config.divergences[f]);
        outcome.global[v * nf + f] =
            global->DivergenceFromInput(config.divergences[f]);
      }
    }
  });

  ExperimentResult result;
  result.config = config;
  for (const ClientOutcome& outcome : outcomes) {
    if (!outcome.status.ok()) return outcome.status;
    result.regenerated += outcome.regenerated;
  }
  if (result.regenerated > budget) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%d regenerations exceed the budget of %d", result.regenerated,
        budget));
  }
  for (int v = 0; v < nv; ++v) {
    const double value = config.privacy_grid[v];
    for (int f = 0; f < nf; ++f) {
      const std::string name = config.divergences[f].Name();
      double local_max = -std::numeric_limits<double>::infinity();
      double global_max = -std::numeric_limits<double>::infinity();
      for (int c = 0; c < config.clients; ++c) {
        const double lv = outcomes[c].local[v * nf + f];
        const double gv = outcomes[c].global[v * nf + f];
        local_max = std::max(local_max, lv);
        global_max = std::max(global_max, gv);
        result.client_rows.push_back(
            {config.id, value, name, "local", lv, c, config.seed});
        result.client_rows.push_back(
            {config.id, value, name, "global", gv, c, config.seed});
      }
      result.rows.push_back(
          {config.id, value, name, "local", local_max, -1, config.seed});
      result.rows.push_back(
          {config.id, value, name, "global", global_max, -1, config.seed});
      FlagOrdering(absl::StrFormat("%s privacy=%g %s", config.id, value, name),
                   local_max, global_max, result.flags);
    }
  }
  return result;
}

absl::StatusOr<ExperimentResult> RunVisual(const ExperimentConfig& config) {
  if (config.visual_points < 2 || !(config.visual_half_width > 0)) {
    return absl::InvalidArgumentError("visual window is empty");
  }
  const double b = config.mixture.scale;
  absl::StatusOr<LaplaceMixture> input = LaplaceMixture::Create(
      2, b, {0.25, 0.25, 0.25, 0.25}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  if (!input.ok()) return input.status();
  const LaplaceMixture h = LaplaceMixture::Centered(2, b);
  QuadratureConfig quadrature = config.quadrature;
  if (quadrature.bounds_per_axis.empty()) {
    quadrature = QuadratureConfig::Box(2, 15 * b, 1024);
  }
  absl::StatusOr<GridPair> pair = GridPair::Create(*input, h, quadrature);
  if (!pair.ok()) return pair.status();

  ExperimentConfig pure = config;
  pure.id = "visual-pure";
  ExperimentConfig gldp = config;
  gldp.id = "visual-gldp";
  absl::StatusOr<SweepSamplers> pure_samplers =
      MakeSweepSamplers(pure, h, config.visual_epsilon);
  if (!pure_samplers.ok()) return pure_samplers.status();
  absl::StatusOr<SweepSamplers> gldp_samplers =
      MakeSweepSamplers(gldp, h, config.visual_nu);
  if (!gldp_samplers.ok()) return gldp_samplers.status();

  ExperimentResult result;
  result.config = config;
  absl::StatusOr<DensityGrid> input_grid = RenderWindow(
      "input", config,
      [&](std::span<const double> x) { return input->DensityUnchecked(x); },
      pair->grid->Integrate(pair->grid->Evaluate(
          [&](std::span<const double> x) {
            return input->DensityUnchecked(x);
          })));
  if (!input_grid.ok()) return input_grid.status();
  result.grids.push_back(*std::move(input_grid));

  const std::vector<std::pair<std::string, const GridSampler*>> outputs = {
      {"local-pure", &pure_samplers->local},
      {"global-pure", &pure_samplers->global},
      {"local-gldp", &gldp_samplers->local},
      {"global-gldp", &gldp_samplers->global}};
  for (const auto& [name, sampler] : outputs) {
    absl::StatusOr<SamplerOutput> out = (*sampler)(*pair);
    if (!out.ok()) return out.status();
    const SamplerOutput& q = *out;
    absl::StatusOr<DensityGrid> grid = RenderWindow(
        name, config,
        [&](std::span<const double> x) { return q.DensityAt(x); },
        AnalyticMass(q));
    if (!grid.ok()) return grid.status();
    result.grids.push_back(*std::move(grid));
  }
  return result;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config) {
  if (config.id == kFinitePure || config.id == kFiniteGldp) {
    return RunFinite(config);
  }
  if (config.id == kLaplace1dPure || config.id == kLaplace1dGldp ||
      config.id == kLaplaceNdPure) {
    return RunLaplaceSweep(config);
  }
  if (config.id == kVisual) return RunVisual(config);
  return absl::NotFoundError(
      absl::StrFormat("unknown experiment id '%s'", config.id));
}

std::string RowsToCsv(std::span<const ResultRow> rows) {
  std::string csv =
      "experiment_id,privacy_param,divergence,sampler,value,client_id,seed\n";
  for (const ResultRow& row : rows) {
    absl::StrAppend(
        &csv, row.experiment_id, ",", FormatDouble(row.privacy_param), ",",
        row.divergence, ",", row.sampler, ",", FormatDouble(row.value), ",",
        row.client_id >= 0 ? absl::StrCat(row.client_id) : "", ",", row.seed,
        "\n");
  }
  return csv;
}

std::string DensityGridToCsv(const DensityGrid& grid) {
  std::string csv = absl::StrFormat("# name=%s\n", grid.name);
  absl::StrAppend(&csv, "# x_min=", FormatDouble(grid.lo),
                  ",x_max=", FormatDouble(grid.hi),
                  ",y_min=", FormatDouble(grid.lo),
                  ",y_max=", FormatDouble(grid.hi), ",points=", grid.points,
                  ",rows=y,columns=x\n");
  for (int iy = 0; iy < grid.points; ++iy) {
    for (int ix = 0; ix < grid.points; ++ix) {
      if (ix > 0) csv += ",";
      csv += FormatDouble(
          grid.values[static_cast<size_t>(iy) * grid.points + ix]);
    }
    csv += "\n";
  }
  return csv;
}

json ExperimentConfigToJson(const ExperimentConfig& config) {
  json divergences = json::array();
  for (const FDivergence& f : config.divergences) divergences.push_back(f.Name());
  json j{{"id", config.id},
         {"privacy_grid", config.privacy_grid},
         {"divergences", divergences},
         {"seed", config.seed},
         {"threads", config.threads}};
  if (config.id == kFinitePure || config.id == kFiniteGldp) {
    j["ks"] = config.ks;
    return j;
  }
  j["mixture"] = {{"k_max", config.mixture.k_max},
                  {"k0", config.mixture.k0},
                  {"dim", config.mixture.dim},
                  {"scale", config.mixture.scale}};
  j["local_gamma"] = config.local_gamma;
  j["global_c1"] = config.global_c1;
  j["global_c2"] = config.global_c2;
  if (!config.quadrature.bounds_per_axis.empty()) {
    j["quadrature"] = QuadratureConfigToJson(config.quadrature);
  }
  if (config.id == kVisual) {
    j["visual"] = {{"epsilon", config.visual_epsilon},
                   {"nu", config.visual_nu},
                   {"half_width", config.visual_half_width},
                   {"points", config.visual_points}};
  } else {
    j["clients"] = config.clients;
    j["max_regeneration_factor"] = config.max_regeneration_factor;
  }
  return j;
}

namespace {

json RowsToJson(std::span<const ResultRow> rows) {
  json out = json::array();
  for (const ResultRow& row : rows) {
    json r{{"experiment_id", row.experiment_id},
           {"privacy_param", row.privacy_param},
           {"divergence", row.divergence},
           {"sampler", row.sampler},
           {"value", row.value},
           {"seed", row.seed}};
    if (row.client_id >= 0) r["client_id"] = row.client_id;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

json ExperimentResultToJson(const ExperimentResult& result) {
  json j{{"config", ExperimentConfigToJson(result.config)},
         {"rows", RowsToJson(result.rows)},
         {"flags", result.flags},
         {"regenerated", result.regenerated}};
  if (!result.client_rows.empty()) {
    j["client_rows"] = RowsToJson(result.client_rows);
  }
  if (!result.grids.empty()) {
    json grids = json::array();
    for (const DensityGrid& g : result.grids) {
      grids.push_back({{"name", g.name},
                       {"lo", g.lo},
                       {"hi", g.hi},
                       {"points", g.points},
                       {"window_mass", g.window_mass},
                       {"solver_mass", g.solver_mass}});
    }
    j["grids"] = std::move(grids);
  }
  return j;
}

absl::StatusOr<std::vector<std::string>> WriteExperimentOutputs(
    const ExperimentResult& result, const std::string& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    return absl::PermissionDeniedError(absl::StrFormat(
        "cannot create directory '%s': %s", directory, ec.message()));
  }
  const std::filesystem::path dir(directory);
  const std::string& id = result.config.id;
  std::vector<std::pair<std::string, std::string>> files;
  if (!result.rows.empty()) {
    files.emplace_back(id + ".csv", RowsToCsv(result.rows));
  }
  if (!result.client_rows.empty()) {
    files.emplace_back(id + "_clients.csv", RowsToCsv(result.client_rows));
  }
  for (const DensityGrid& grid : result.grids) {
    files.emplace_back(absl::StrFormat("%s_%s.csv", id, grid.name),
                       DensityGridToCsv(grid));
  }
  files.emplace_back(id + ".json",
                     ExperimentResultToJson(result).dump(2) + "\n");
  std::vector<std::string> written;
  for (const auto& [name, contents] : files) {
    const std::string path = (dir / name).string();
    if (absl::Status s = WriteTextFile(path, contents); !s.ok()) return s;
    written.push_back(path);
  }
  return written;
}

}  // namespace ldp_sampling
