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

#include "ldp_sampling/serialization.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/strings/str_format.h"

namespace ldp_sampling {
namespace {

using nlohmann::json;

// NaN has no JSON literal.
json Number(double value) {
  if (std::isnan(value)) return nullptr;
  return value;
}

std::string SchemeName(QuadratureScheme scheme) {
  return scheme == QuadratureScheme::kTrapezoid ? "trapezoid"
                                                : "gauss-legendre";
}

}  // namespace

json MixtureToJson(const LaplaceMixture& mixture) {
  return json{{"dim", mixture.dim()},
              {"scale", mixture.scale()},
              {"weights", mixture.weights()},
              {"means", mixture.means()}};
}

absl::StatusOr<LaplaceMixture> MixtureFromJson(const json& j) {
  try {
    return LaplaceMixture::Create(
        j.at("dim").get<int>(), j.at("scale").get<double>(),
        j.at("weights").get<std::vector<double>>(),
        j.at("means").get<std::vector<std::vector<double>>>());
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrFormat("malformed mixture JSON: %s", e.what()));
  }
}

json PmfToJson(const DiscretePmf& pmf) { return json{{"probs", pmf.probs()}}; }

absl::StatusOr<DiscretePmf> PmfFromJson(const json& j) {
  try {
    return DiscretePmf::Create(j.at("probs").get<std::vector<double>>());
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrFormat("malformed pmf JSON: %s", e.what()));
  }
}

absl::StatusOr<std::variant<DiscretePmf, LaplaceMixture>> DistributionFromJson(
    const json& j) {
  if (j.is_object() && j.contains("probs")) {
    absl::StatusOr<DiscretePmf> pmf = PmfFromJson(j);
    if (!pmf.ok()) return pmf.status();
    return *std::move(pmf);
  }
  if (j.is_object() && j.contains("means")) {
    absl::StatusOr<LaplaceMixture> mixture = MixtureFromJson(j);
    if (!mixture.ok()) return mixture.status();
    return *std::move(mixture);
  }
  return absl::InvalidArgumentError(
      "distribution JSON needs either \"probs\" or \"means\"");
}

json QuadratureConfigToJson(const QuadratureConfig& config) {
  json bounds = json::array();
  for (const AxisBounds& b : config.bounds_per_axis) {
    bounds.push_back({b.lo, b.hi});
  }
  return json{{"bounds", bounds},
              {"points_per_axis", config.points_per_axis},
              {"scheme", SchemeName(config.scheme)}};
}

json RiskReportToJson(const RiskReport& report) {
  return json{{"lambda_star", Number(report.lambda_star)},
              {"r1", Number(report.r1)},
              {"r2", Number(report.r2)},
              {"risk", Number(report.risk)},
              {"trivial", report.trivial},
              {"input",
               {{"c1", report.c1},
                {"c2", report.c2},
                {"privacy", report.privacy},
                {"divergence", report.divergence},
                {"sampler", report.sampler}}}};
}

json ProvenanceToJson(const SamplerProvenance& p) {
  return json{{"sampler", SamplerKindName(p.kind)},
              {"privacy", p.privacy},
              {"lambda", Number(p.lambda)},
              {"r_p", Number(p.r_p)},
              {"b", Number(p.b)},
              {"b_eps", Number(p.b_eps)},
              {"c1", p.c1},
              {"c2", p.c2},
              {"trivial", p.trivial}};
}

json SamplerOutputToJson(const SamplerOutput& output) {
  json j{{"provenance", ProvenanceToJson(output.provenance)}};
  if (output.is_discrete()) {
    j["form"] = "discrete";
    j["pmf"] = output.masses;
    j["ratio"] = output.ratio;
    return j;
  }
  j["form"] = "continuous";
  if (output.grid != nullptr) {
    j["grid"] = QuadratureConfigToJson(output.grid->config());
  }
  j["ratio"] = output.ratio;
  j["density_scale"] = output.density_scale;
  if (output.input.has_value()) j["input"] = MixtureToJson(*output.input);
  if (output.reference.has_value()) {
    j["reference"] = MixtureToJson(*output.reference);
  }
  return j;
}

absl::StatusOr<json> ParseJson(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("invalid JSON");
  return j;
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrFormat("cannot open '%s'", path));
  }
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrFormat("cannot write '%s'", path));
  }
  out << text;
  out.close();
  if (!out) {
    return absl::DataLossError(absl::StrFormat("write to '%s' failed", path));
  }
  return absl::OkStatus();
}

std::string FormatDouble(double value) {
  return absl::StrFormat("%.17g", value);
}

}  // namespace ldp_sampling
