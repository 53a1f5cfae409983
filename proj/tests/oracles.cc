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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ldp_sampling::testing {
namespace {

constexpr double kInvPhi = 0.6180339887498949;

double ConjugateTerm(const TradeoffFunction& g, double slope, double theta) {
  return -slope * theta - *g.Eval(theta);
}

double ClipSum(std::span<const double> rho, std::span<const double> w,
               double b, double b_eps, double r) {
  double total = 0;
  for (size_t i = 0; i < rho.size(); ++i) {
    total += w[i] * std::clamp(rho[i] / r, b, b_eps);
  }
  return total;
}

}  // namespace

double BruteForceConjugate(const TradeoffFunction& g, double beta, int grid) {
  const double slope = std::exp(beta);
  double best = -std::numeric_limits<double>::infinity();
  int best_index = 0;
  for (int i = 0; i <= grid; ++i) {
    const double value =
        ConjugateTerm(g, slope, static_cast<double>(i) / grid);
    if (value > best) {
      best = value;
      best_index = i;
    }
  }
  double a = std::max(0, best_index - 1) / static_cast<double>(grid);
  double b = std::min(grid, best_index + 1) / static_cast<double>(grid);
  for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
    const double c = b - kInvPhi * (b - a);
    const double d = a + kInvPhi * (b - a);
    if (ConjugateTerm(g, slope, c) >= ConjugateTerm(g, slope, d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return std::max(best, ConjugateTerm(g, slope, 0.5 * (a + b)));
}

double BruteForceNormalizer(std::span<const double> rho,
                            std::span<const double> w, double b, double b_eps,
                            int steps) {
  const double lo = std::log(*std::min_element(rho.begin(), rho.end()) /
                             b_eps / 2);
  const double hi =
      std::log(*std::max_element(rho.begin(), rho.end()) / b * 2);
  double prev_r = std::exp(lo);
  double prev = ClipSum(rho, w, b, b_eps, prev_r) - 1;
  for (int i = 1; i <= steps; ++i) {
    const double r = std::exp(lo + (hi - lo) * i / steps);
    const double value = ClipSum(rho, w, b, b_eps, r) - 1;
    if (value == 0) return r;
    if ((prev > 0) != (value > 0)) {
      return prev_r + (r - prev_r) * prev / (prev - value);
    }
    prev = value;
    prev_r = r;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double BruteForceBandMinimum(const FDivergence& f, std::span<const double> p,
                             std::span<const double> lo,
                             std::span<const double> hi, int grid,
                             int refine_steps) {
  auto value = [&](const std::vector<double>& q) {
    double total = 0;
    for (int i = 0; i < 4; ++i) total += f.PointContribution(p[i], q[i]);
    return total;
  };
  auto feasible = [&](const std::vector<double>& q) {
    for (int i = 0; i < 4; ++i) {
      if (q[i] < lo[i] || q[i] > hi[i]) return false;
    }
    return true;
  };
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_q(4);
  std::vector<double> q(4);
  for (int a = 0; a <= grid; ++a) {
    q[0] = lo[0] + (hi[0] - lo[0]) * a / grid;
    for (int b = 0; b <= grid; ++b) {
      q[1] = lo[1] + (hi[1] - lo[1]) * b / grid;
      for (int c = 0; c <= grid; ++c) {
        q[2] = lo[2] + (hi[2] - lo[2]) * c / grid;
        q[3] = 1 - q[0] - q[1] - q[2];
        if (!feasible(q)) continue;
        const double v = value(q);
        if (v < best) {
          best = v;
          best_q = q;
        }
      }
    }
  }
  // Mass moves between pairs of coordinates keep the sum fixed.
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> pick(0, 3);
  double step = 0.5 * (hi[0] - lo[0]) / grid;
  for (int s = 0; s < refine_steps; ++s) {
    const int i = pick(rng);
    const int j = (i + 1 + pick(rng) % 3) % 4;
    const double delta =
        std::uniform_real_distribution<double>(-step, step)(rng);
    q = best_q;
    q[i] += delta;
    q[j] -= delta;
    if (!feasible(q)) continue;
    const double v = value(q);
    if (v < best) {
      best = v;
      best_q = q;
    }
    if (s % 2000 == 1999) step *= 0.5;
  }
  return best;
}

}  // namespace ldp_sampling::testing
