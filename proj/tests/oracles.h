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

// Independent reference computations used by the tests. Nothing here calls
// the closed forms under test; each oracle is a brute-force search.

#ifndef LDP_SAMPLING_TESTS_ORACLES_H_
#define LDP_SAMPLING_TESTS_ORACLES_H_

#include <span>
#include <vector>

#include "ldp_sampling/divergence.h"
#include "ldp_sampling/tradeoff.h"

namespace ldp_sampling::testing {

// sup over theta in [0, 1] of (-e^beta theta - g(theta)), by a dense grid
// followed by golden-section refinement around the best cell.
double BruteForceConjugate(const TradeoffFunction& g, double beta,
                           int grid = 4000);

// The r solving sum_i w_i clip(rho_i / r, b, b_eps) = 1, by scanning `steps`
// log-spaced values of r and interpolating the crossing.
double BruteForceNormalizer(std::span<const double> rho,
                            std::span<const double> w, double b, double b_eps,
                            int steps = 1000000);

// min over q in the band [lo_i, hi_i] with sum q = 1 of D_f(p || q) for
// four-point pmfs: a coarse grid over (q_0, q_1, q_2) and then random local
// search from the best grid point.
double BruteForceBandMinimum(const FDivergence& f, std::span<const double> p,
                             std::span<const double> lo,
                             std::span<const double> hi, int grid = 48,
                             int refine_steps = 20000);

}  // namespace ldp_sampling::testing

#endif  // LDP_SAMPLING_TESTS_ORACLES_H_
