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

#include "ldp_sampling/numerics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace ldp_sampling {
namespace {

constexpr int kMaxBisectIterations = 200;
constexpr int kMaxGoldenIterations = 200;
constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer; a bijection on 64-bit words.
uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool SameStrictSign(double a, double b) {
  return (a > 0 && b > 0) || (a < 0 && b < 0);
}

}  // namespace

absl::StatusOr<Bracket> MakeBracket(absl::FunctionRef<double(double)> f,
                                    double lo, double hi, double tol) {
  if (!(lo < hi)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("bracket requires lo < hi, got [%g, %g]", lo, hi));
  }
  Bracket bracket{lo, hi, f(lo), f(hi)};
  if (std::isnan(bracket.f_lo) || std::isnan(bracket.f_hi)) {
    return absl::InvalidArgumentError("function is NaN at a bracket endpoint");
  }
  if (SameStrictSign(bracket.f_lo, bracket.f_hi) &&
      std::abs(bracket.f_lo) > tol && std::abs(bracket.f_hi) > tol) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "no sign change on [%g, %g]: f(lo)=%g, f(hi)=%g", lo, hi,
        bracket.f_lo, bracket.f_hi));
  }
  return bracket;
}

absl::StatusOr<double> Bisect(absl::FunctionRef<double(double)> f,
                              const Bracket& bracket, double tol) {
  if (!(bracket.lo < bracket.hi)) {
    return absl::InvalidArgumentError("bracket requires lo < hi");
  }
  if (std::abs(bracket.f_lo) <= tol) return bracket.lo;
  if (std::abs(bracket.f_hi) <= tol) return bracket.hi;
  if (SameStrictSign(bracket.f_lo, bracket.f_hi)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "no sign change on [%g, %g]", bracket.lo, bracket.hi));
  }
  double lo = bracket.lo;
  double hi = bracket.hi;
  const bool increasing = bracket.f_lo < 0;
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < kMaxBisectIterations; ++i) {
    mid = 0.5 * (lo + hi);
    const double value = f(mid);
    if (std::abs(value) <= tol) return mid;
    if ((value < 0) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= tol * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

absl::StatusOr<ScalarMinimum> MinimizeScalar(
    absl::FunctionRef<double(double)> f, double lo, double hi, int grid,
    double tol) {
  if (!(lo < hi)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("minimize_scalar requires lo < hi, got [%g, %g]", lo,
                        hi));
  }
  if (grid < 64) {
    return absl::InvalidArgumentError("minimize_scalar requires grid >= 64");
  }
  const double step = (hi - lo) / grid;
  ScalarMinimum best{lo, f(lo)};
  int best_index = 0;
  for (int i = 1; i <= grid; ++i) {
    const double x = (i == grid) ? hi : lo + i * step;
    const double value = f(x);
    if (value < best.value) {
      best = {x, value};
      best_index = i;
    }
  }

  double a = lo + std::max(0, best_index - 1) * step;
  double b = (best_index + 1 >= grid) ? hi : lo + (best_index + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < kMaxGoldenIterations && (b - a) > tol; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

double StandardNormalCdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double StandardNormalQuantile(double p) {
  if (p <= 0) return -std::numeric_limits<double>::infinity();
  if (p >= 1) return std::numeric_limits<double>::infinity();
  if (p > 0.5) return -StandardNormalQuantile(1.0 - p);

  // Rational approximation (P. J. Acklam), relative error ~1e-9, followed by
  // Halley steps against the erfc-based CDF.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;
  double x;
  if (p < kLow) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  }
  for (int i = 0; i < 2; ++i) {
    const double e = StandardNormalCdf(x) - p;
    const double u = e * std::sqrt(2 * std::numbers::pi) * std::exp(x * x / 2);
    x = x - u / (1 + x * u / 2);
  }
  return x;
}

uint64_t StableHash(std::string_view text) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

RngStream::RngStream(uint64_t seed) : key_(Mix64(seed)), counter_(0) {}

RngStream::RngStream(uint64_t seed, std::string_view experiment,
                     uint64_t client, RngPurpose purpose)
    : counter_(0) {
  uint64_t key = Mix64(seed);
  key = Mix64(key ^ StableHash(experiment));
  key = Mix64(key ^ (client * kGoldenGamma));
  key = Mix64(key ^ (static_cast<uint64_t>(purpose) + 0x632be59bd9b4e019ULL));
  key_ = key;
}

RngStream::result_type RngStream::operator()() {
  return Mix64(key_ + (++counter_) * kGoldenGamma);
}

RngStream RngStream::Split(uint64_t child) const {
  return RngStream(Mix64(key_ ^ Mix64(child + 0xd1b54a32d192ed03ULL)), 0);
}

double RngStream::UniformOpen() {
  // 53 random bits centred in their cell, so the result is never 0 or 1.
  return ((*this)() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double RngStream::Uniform(double lo, double hi) {
  return lo + (hi - lo) * (((*this)() >> 11) * 0x1.0p-53);
}

double RngStream::StandardExponential() { return -std::log(UniformOpen()); }

double RngStream::StandardLaplace() {
  const double u = UniformOpen() - 0.5;
  return u < 0 ? std::log1p(2 * u) : -std::log1p(-2 * u);
}

int64_t RngStream::Poisson(double mean) {
  if (!(mean > 0)) return 0;
  const double u = UniformOpen();
  double term = std::exp(-std::min(mean, 500.0));
  double cdf = term;
  int64_t k = 0;
  while (u > cdf && term > 0) {
    ++k;
    term *= mean / k;
    cdf += term;
  }
  return k;
}

}  // namespace ldp_sampling
