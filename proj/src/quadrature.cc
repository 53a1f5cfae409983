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

#include "ldp_sampling/quadrature.h"

#include <cmath>
#include <numbers>
#include <utility>

#include "absl/strings/str_format.h"

namespace ldp_sampling {
namespace {

constexpr int kMinPointsPerAxis = 16;
constexpr int kPanelNodes = 16;
constexpr size_t kMaxGridSize = size_t{1} << 28;

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
Rule GaussLegendreRule(int n) {
  Rule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

Rule TrapezoidAxis(const AxisBounds& bounds, int points) {
  Rule rule{std::vector<double>(points), std::vector<double>(points)};
  const double h = (bounds.hi - bounds.lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    rule.nodes[i] = (i == points - 1) ? bounds.hi : bounds.lo + i * h;
    rule.weights[i] = (i == 0 || i == points - 1) ? 0.5 * h : h;
  }
  return rule;
}

Rule CompositeGaussLegendreAxis(const AxisBounds& bounds, int points) {
  static const Rule* const kPanel = new Rule(GaussLegendreRule(kPanelNodes));
  const int panels = points / kPanelNodes;
  const double width = (bounds.hi - bounds.lo) / panels;
  Rule rule;
  rule.nodes.reserve(points);
  rule.weights.reserve(points);
  for (int p = 0; p < panels; ++p) {
    const double centre = bounds.lo + (p + 0.5) * width;
    for (int j = 0; j < kPanelNodes; ++j) {
      rule.nodes.push_back(centre + 0.5 * width * kPanel->nodes[j]);
      rule.weights.push_back(0.5 * width * kPanel->weights[j]);
    }
  }
  return rule;
}

}  // namespace

absl::Status QuadratureConfig::Validate() const {
  if (bounds_per_axis.empty()) {
    return absl::InvalidArgumentError("quadrature needs at least one axis");
  }
  for (size_t axis = 0; axis < bounds_per_axis.size(); ++axis) {
    const AxisBounds& b = bounds_per_axis[axis];
    if (!(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo < b.hi)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "axis %d: need finite lo < hi, got [%g, %g]", axis, b.lo, b.hi));
    }
  }
  if (points_per_axis < kMinPointsPerAxis) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "points_per_axis must be >= %d, got %d", kMinPointsPerAxis,
        points_per_axis));
  }
  if (scheme == QuadratureScheme::kGaussLegendre &&
      points_per_axis % kPanelNodes != 0) {
    return absl::InvalidArgumentError(
        "Gauss-Legendre points_per_axis must be a multiple of 16");
  }
  double total = 1;
  for (size_t i = 0; i < bounds_per_axis.size(); ++i) total *= points_per_axis;
  if (total > static_cast<double>(kMaxGridSize)) {
    return absl::InvalidArgumentError("quadrature grid too large");
  }
  return absl::OkStatus();
}

QuadratureConfig QuadratureConfig::Box(int dim, double half_width,
                                       int points_per_axis) {
  QuadratureConfig config;
  config.bounds_per_axis.assign(dim, AxisBounds{-half_width, half_width});
  config.points_per_axis =
      points_per_axis > 0 ? points_per_axis : (dim == 1 ? 4096 : 512);
  return config;
}

QuadratureConfig QuadratureConfig::ForScale(int dim, double scale,
                                            int points_per_axis) {
  return Box(dim, 30.0 * scale, points_per_axis);
}

absl::StatusOr<QuadratureGrid> QuadratureGrid::Create(
    const QuadratureConfig& config) {
  if (absl::Status status = config.Validate(); !status.ok()) return status;
  QuadratureGrid grid;
  grid.config_ = config;
  grid.size_ = 1;
  for (const AxisBounds& bounds : config.bounds_per_axis) {
    Rule rule = config.scheme == QuadratureScheme::kTrapezoid
                    ? TrapezoidAxis(bounds, config.points_per_axis)
                    : CompositeGaussLegendreAxis(bounds, config.points_per_axis);
    grid.nodes_.push_back(std::move(rule.nodes));
    grid.weights_.push_back(std::move(rule.weights));
    grid.size_ *= config.points_per_axis;
  }
  grid.point_weights_.resize(grid.size_);
  const size_t n = config.points_per_axis;
  for (size_t i = 0; i < grid.size_; ++i) {
    size_t index = i;
    double w = 1;
    for (int axis = grid.dim() - 1; axis >= 0; --axis) {
      w *= grid.weights_[axis][index % n];
      index /= n;
    }
    grid.point_weights_[i] = w;
  }
  return grid;
}

void QuadratureGrid::Point(size_t index, std::span<double> out) const {
  const size_t n = config_.points_per_axis;
  for (int axis = dim() - 1; axis >= 0; --axis) {
    out[axis] = nodes_[axis][index % n];
    index /= n;
  }
}

double QuadratureGrid::Weight(size_t index) const {
  return point_weights_[index];
}

std::vector<double> QuadratureGrid::Evaluate(DensityRef f) const {
  std::vector<double> values(size_);
  std::vector<double> point(dim());
  for (size_t i = 0; i < size_; ++i) {
    Point(i, point);
    values[i] = f(point);
  }
  return values;
}

double QuadratureGrid::Integrate(std::span<const double> values) const {
  double total = 0;
  for (size_t i = 0; i < size_; ++i) total += point_weights_[i] * values[i];
  return total;
}

}  // namespace ldp_sampling
