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

#ifndef LDP_SAMPLING_QUADRATURE_H_
#define LDP_SAMPLING_QUADRATURE_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace ldp_sampling {

// A density on R^n, evaluated at a point of the right dimension.
using DensityFn = std::function<double(std::span<const double>)>;
using DensityRef = absl::FunctionRef<double(std::span<const double>)>;

enum class QuadratureScheme { kTrapezoid, kGaussLegendre };

struct AxisBounds {
  double lo = 0;
  double hi = 0;
};

// Fixed tensor-product integration rule. Gauss-Legendre is composite with
// 16-node panels, so points_per_axis must be a multiple of 16 for it.
struct QuadratureConfig {
  std::vector<AxisBounds> bounds_per_axis;
  int points_per_axis = 4096;
  QuadratureScheme scheme = QuadratureScheme::kTrapezoid;

  int dim() const { return static_cast<int>(bounds_per_axis.size()); }
  absl::Status Validate() const;

  // Symmetric box of +-`half_width` on every axis. Defaults to 4096 points in
  // 1-D and 512 per axis otherwise.
  static QuadratureConfig Box(int dim, double half_width, int points_per_axis = 0);
  // The box used for divergences of Laplace-type densities with scale `scale`:
  // +-30 scale units.
  static QuadratureConfig ForScale(int dim, double scale, int points_per_axis = 0);
};

// Materialized nodes and weights. Points are enumerated in row-major order
// (last axis fastest).
class QuadratureGrid {
 public:
  static absl::StatusOr<QuadratureGrid> Create(const QuadratureConfig& config);

  int dim() const { return static_cast<int>(nodes_.size()); }
  size_t size() const { return size_; }
  const std::vector<double>& axis_nodes(int axis) const { return nodes_[axis]; }
  const std::vector<double>& axis_weights(int axis) const {
    return weights_[axis];
  }
  const QuadratureConfig& config() const { return config_; }

  // Writes point `index` into `out` (size dim()).
  void Point(size_t index, std::span<double> out) const;
  double Weight(size_t index) const;
  const std::vector<double>& weights() const { return point_weights_; }

  // f at every node, in point order.
  std::vector<double> Evaluate(DensityRef f) const;
  // Sum of weights[i] * values[i].
  double Integrate(std::span<const double> values) const;

 private:
  QuadratureGrid() = default;

  QuadratureConfig config_;
  std::vector<std::vector<double>> nodes_;
  std::vector<std::vector<double>> weights_;
  std::vector<double> point_weights_;
  size_t size_ = 0;
};

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_QUADRATURE_H_
