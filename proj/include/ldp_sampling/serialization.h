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

#ifndef LDP_SAMPLING_SERIALIZATION_H_
#define LDP_SAMPLING_SERIALIZATION_H_

#include <string>
#include <variant>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "ldp_sampling/distributions.h"
#include "ldp_sampling/quadrature.h"
#include "ldp_sampling/risk.h"
#include "ldp_sampling/samplers.h"

namespace ldp_sampling {

// {"dim": n, "scale": b, "weights": [...], "means": [[...], ...]}
nlohmann::json MixtureToJson(const LaplaceMixture& mixture);
absl::StatusOr<LaplaceMixture> MixtureFromJson(const nlohmann::json& j);

// {"probs": [...]}
nlohmann::json PmfToJson(const DiscretePmf& pmf);
absl::StatusOr<DiscretePmf> PmfFromJson(const nlohmann::json& j);

// A pmf when "probs" is present, a mixture when "means" is present.
absl::StatusOr<std::variant<DiscretePmf, LaplaceMixture>> DistributionFromJson(
    const nlohmann::json& j);

nlohmann::json QuadratureConfigToJson(const QuadratureConfig& config);
nlohmann::json RiskReportToJson(const RiskReport& report);
nlohmann::json ProvenanceToJson(const SamplerProvenance& provenance);
// Discrete outputs carry the pmf; continuous outputs carry the ratio at every
// grid node plus the grid description.
nlohmann::json SamplerOutputToJson(const SamplerOutput& output);

absl::StatusOr<nlohmann::json> ParseJson(const std::string& text);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, const std::string& text);

// %.17g, the round-trip representation used in every text output.
std::string FormatDouble(double value);

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_SERIALIZATION_H_
