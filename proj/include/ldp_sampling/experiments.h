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

#ifndef LDP_SAMPLING_EXPERIMENTS_H_
#define LDP_SAMPLING_EXPERIMENTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "ldp_sampling/distributions.h"
#include "ldp_sampling/divergence.h"
#include "ldp_sampling/quadrature.h"

namespace ldp_sampling {

// Experiment ids: finite-pure, finite-gldp, laplace1d-pure, laplace1d-gldp,
// laplacend-pure, visual.
struct ExperimentConfig {
  std::string id;
  // epsilon values for pure runs, nu values for gldp runs.
  std::vector<double> privacy_grid;
  std::vector<FDivergence> divergences;
  uint64_t seed = 0;
  // Worker threads; 0 uses the hardware concurrency.
  int threads = 0;

  // Finite-space runs: support sizes, each even; gamma = k/2 - 1.
  std::vector<int> ks;

  // Laplace sweeps.
  int clients = 100;
  MixtureGenConfig mixture;
  double local_gamma = 3;
  double global_c1 = 1.0 / 9;
  double global_c2 = 9;
  QuadratureConfig quadrature;
  // Regeneration budget, as a multiple of the client count.
  int max_regeneration_factor = 10;

  // Visual.
  double visual_epsilon = 1;
  double visual_nu = 1.5;
  double visual_half_width = 8;
  int visual_points = 256;

  bool is_pure() const;
};

// The defaults for `id`; NotFound for an unknown id.
absl::StatusOr<ExperimentConfig> DefaultExperimentConfig(const std::string& id);
std::vector<std::string> ExperimentIds();

struct ResultRow {
  std::string experiment_id;
  double privacy_param = 0;
  std::string divergence;
  // "local" or "global".
  std::string sampler;
  double value = 0;
  // -1 for rows aggregated over clients.
  int client_id = -1;
  uint64_t seed = 0;
};

// A density on a regular window, row-major with x varying fastest.
struct DensityGrid {
  std::string name;
  double lo = 0;
  double hi = 0;
  int points = 0;
  std::vector<double> values;
  // Trapezoid mass over the window.
  double window_mass = 0;
  // Output mass on the full solver grid (1 for a normalized output).
  double solver_mass = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ResultRow> rows;
  std::vector<ResultRow> client_rows;
  // Rows where the local value is not below the global one.
  std::vector<std::string> flags;
  std::vector<DensityGrid> grids;
  int regenerated = 0;
};

absl::StatusOr<ExperimentResult> RunFinite(const ExperimentConfig& config);
absl::StatusOr<ExperimentResult> RunLaplaceSweep(
    const ExperimentConfig& config);
absl::StatusOr<ExperimentResult> RunVisual(const ExperimentConfig& config);
// Dispatches on config.id.
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& config);

// experiment_id,privacy_param,divergence,sampler,value,client_id,seed
std::string RowsToCsv(std::span<const ResultRow> rows);
// Header lines start with '#'; then one line per y node.
std::string DensityGridToCsv(const DensityGrid& grid);
nlohmann::json ExperimentConfigToJson(const ExperimentConfig& config);
nlohmann::json ExperimentResultToJson(const ExperimentResult& result);

// Writes <id>.csv, <id>_clients.csv (sweeps), <id>_<grid>.csv (visual) and
// <id>.json into `directory`; returns the paths written.
absl::StatusOr<std::vector<std::string>> WriteExperimentOutputs(
    const ExperimentResult& result, const std::string& directory);

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_EXPERIMENTS_H_
