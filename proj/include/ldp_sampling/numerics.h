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

#ifndef LDP_SAMPLING_NUMERICS_H_
#define LDP_SAMPLING_NUMERICS_H_

#include <cstdint>
#include <limits>
#include <string_view>

#include "absl/functional/function_ref.h"
#include "absl/status/statusor.h"

namespace ldp_sampling {

// A root-finding interval. `f_lo` and `f_hi` are the function values at the
// endpoints and must have opposite signs (or one of them is ~0).
struct Bracket {
  double lo = 0;
  double hi = 0;
  double f_lo = 0;
  double f_hi = 0;
};

// Evaluates `f` at both endpoints and returns the bracket, or an
// InvalidArgument error when there is no sign change on [lo, hi].
absl::StatusOr<Bracket> MakeBracket(absl::FunctionRef<double(double)> f,
                                    double lo, double hi, double tol = 0);

// Bisection for a continuous monotone function. Stops when |f(x)| <= tol or
// the interval width drops below tol * max(1, |x|); at most 200 iterations.
absl::StatusOr<double> Bisect(absl::FunctionRef<double(double)> f,
                              const Bracket& bracket, double tol);

struct ScalarMinimum {
  double argmin = 0;
  double value = 0;
};

// Coarse scan of `grid` + 1 equally spaced points on [lo, hi] followed by
// golden-section refinement over the two cells adjacent to the best point.
// The returned value never exceeds the best value seen on the coarse grid.
absl::StatusOr<ScalarMinimum> MinimizeScalar(
    absl::FunctionRef<double(double)> f, double lo, double hi, int grid,
    double tol);

// Standard normal CDF, accurate to a few ulps across the real line.
double StandardNormalCdf(double x);

// Inverse of StandardNormalCdf on (0, 1); returns -inf / +inf at 0 / 1.
double StandardNormalQuantile(double p);

// 64-bit stable string hash (FNV-1a), used to derive RNG keys from ids.
uint64_t StableHash(std::string_view text);

// What a random stream is used for. Streams with different purposes but the
// same (seed, id) are statistically independent.
enum class RngPurpose : uint64_t {
  kGeneric = 0,
  kMixtureGeneration = 1,
  kMixtureSampling = 2,
  kSamplerDraw = 3,
  kVerificationPairs = 4,
  kTestInputs = 5,
};

// Counter-based generator: the i-th output is a bijective mix of (key, i), so
// a stream is fully determined by its key and position. Satisfies the
// UniformRandomBitGenerator requirements.
class RngStream {
 public:
  using result_type = uint64_t;

  explicit RngStream(uint64_t seed);
  // Stream keyed by (seed, experiment id, client id, purpose).
  RngStream(uint64_t seed, std::string_view experiment, uint64_t client,
            RngPurpose purpose);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Independent child stream; does not advance this stream.
  RngStream Split(uint64_t child) const;

  // Uniform on the open interval (0, 1).
  double UniformOpen();
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi);
  double StandardExponential();
  // Laplace(0, 1) by inversion.
  double StandardLaplace();
  // Poisson by sequential CDF inversion; mean must be in [0, 500].
  int64_t Poisson(double mean);

  uint64_t key() const { return key_; }
  uint64_t counter() const { return counter_; }

 private:
  RngStream(uint64_t key, uint64_t counter) : key_(key), counter_(counter) {}

  uint64_t key_;
  uint64_t counter_;
};

}  // namespace ldp_sampling

#endif  // LDP_SAMPLING_NUMERICS_H_
