// Copyright 2026 The bdp-markov Authors
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

#include "bdp/hmm_oracle.h"

#include <cmath>
#include <cstdint>

#include "absl/strings/str_cat.h"

namespace bdp {
namespace {

absl::Status CheckOracleArgs(const BinaryMarkovChain& chain,
                             const BitSeries& z, std::size_t i,
                             std::size_t max_n) {
  if (z.empty() || z.size() > max_n) {
    return absl::InvalidArgumentError(
        absl::StrCat("oracle supports 1 <= n <= ", max_n, "; got ", z.size()));
  }
  if (i < 1 || i > z.size()) {
    return absl::OutOfRangeError(absl::StrCat("position ", i, " out of range"));
  }
  if (!(chain.q() > 0.0) || !(chain.r() > 0.0)) {
    return absl::InvalidArgumentError("oracle requires q, r > 0");
  }
  return absl::OkStatus();
}

// Plain (linear-space) probability of hidden sequence `x` and observation z.
double JointProbability(const BinaryMarkovChain& chain,
                        const NoiseParams& noise, const BitSeries& x,
                        const BitSeries& z) {
  const double pi1 = chain.q() / (chain.q() + chain.r());
  double p = x[0] == 1 ? pi1 : 1.0 - pi1;
  p *= noise.Emission(x[0], z[0]);
  for (std::size_t t = 1; t < x.size(); ++t) {
    p *= chain.Transition(x[t - 1], x[t]) * noise.Emission(x[t], z[t]);
  }
  return p;
}

}  // namespace

absl::StatusOr<double> BruteForceLogLikelihood(const BinaryMarkovChain& chain,
                                               const NoiseParams& noise,
                                               const BitSeries& z,
                                               std::size_t i, int x) {
  if (absl::Status s = CheckOracleArgs(chain, z, i, kMaxOracleLength);
      !s.ok()) {
    return s;
  }
  const std::size_t n = z.size();
  double total = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    BitSeries seq = BitSeries::FromInteger(v, n);
    if (seq[i - 1] != x) continue;
    total += JointProbability(chain, noise, seq, z);
  }
  const double pi1 = chain.q() / (chain.q() + chain.r());
  return std::log(total) - std::log(x == 1 ? pi1 : 1.0 - pi1);
}

absl::StatusOr<BitSeries> BruteForceViterbi(const BinaryMarkovChain& chain,
                                            const NoiseParams& noise,
                                            const BitSeries& z,
                                            double tie_tolerance) {
  if (absl::Status s = CheckOracleArgs(chain, z, 1, kMaxOracleLength);
      !s.ok()) {
    return s;
  }
  const std::size_t n = z.size();
  double best_score = -1.0;
  BitSeries best;
  // Enumeration is lexicographic, so replacing only on a clear improvement
  // keeps the first optimal sequence.
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    BitSeries seq = BitSeries::FromInteger(v, n);
    const double score = std::log(JointProbability(chain, noise, seq, z));
    if (best.empty() || score > best_score + tie_tolerance) {
      best_score = score;
      best = seq;
    }
  }
  return best;
}

absl::StatusOr<double> BruteForceCorrelatedLogLikelihood(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    const BitSeries& z, std::size_t i, int x) {
  if (absl::Status s = CheckOracleArgs(chain, z, i, kMaxCorrelatedOracleLength);
      !s.ok()) {
    return s;
  }
  const std::size_t n = z.size();
  const double pi1 = chain.q() / (chain.q() + chain.r());
  const double noise_pi1 = noise.rho0() / (noise.rho0() + noise.rho1());
  double total = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    BitSeries xs = BitSeries::FromInteger(v, n);
    if (xs[i - 1] != x) continue;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      BitSeries ys = BitSeries::FromInteger(w, n);
      bool consistent = true;
      for (std::size_t t = 0; t < n && consistent; ++t) {
        consistent = (xs[t] ^ ys[t]) == z[t];
      }
      if (!consistent) continue;
      double p = (xs[0] == 1 ? pi1 : 1.0 - pi1) *
                 (ys[0] == 1 ? noise_pi1 : 1.0 - noise_pi1);
      for (std::size_t t = 1; t < n; ++t) {
        p *= chain.Transition(xs[t - 1], xs[t]) *
             noise.Transition(ys[t - 1], ys[t]);
      }
      total += p;
    }
  }
  return std::log(total) - std::log(x == 1 ? pi1 : 1.0 - pi1);
}

}  // namespace bdp
