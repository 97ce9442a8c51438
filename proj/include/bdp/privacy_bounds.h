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

#ifndef BDP_PRIVACY_BOUNDS_H_
#define BDP_PRIVACY_BOUNDS_H_

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "bdp/markov_chain.h"
#include "bdp/sanitizer.h"

namespace bdp {

// Privacy budget in nats. Always finite and positive.
class PrivacyBudget {
 public:
  static absl::StatusOr<PrivacyBudget> Create(double epsilon);
  double epsilon() const { return epsilon_; }

 private:
  explicit PrivacyBudget(double epsilon) : epsilon_(epsilon) {}
  double epsilon_;
};

// Eigen-quantities of the two-state forward recurrence at z = all-0.
struct ClosedFormConstants {
  double a;
  double b;
  double c;
  double d;
  double lambda1;
  double lambda2;
  double sigma;  // lambda2 / lambda1
  double gamma;  // (a - d)(c - b) / ((a - c)(d - b))
};

// All of the functions below need 0 < q, r < 0.5 and 0 < rho0, rho1 < 0.5
// unless stated otherwise.
absl::StatusOr<ClosedFormConstants> ComputeClosedFormConstants(
    const BinaryMarkovChain& chain, const NoiseParams& noise);

// Limits of the likelihood ratio over all n, z and i, for both directions:
// log_bound0 bounds Pr[z | X_i = 0] / Pr[z | X_i = 1] and equals
// log(a^2 / (c d)); log_bound1 is the same with the state labels exchanged.
struct LrBounds {
  double log_bound0;
  double log_bound1;
  double LogMax() const { return std::max(log_bound0, log_bound1); }
};
absl::StatusOr<LrBounds> LrBound(const BinaryMarkovChain& chain,
                                 const NoiseParams& noise);

// Bound for q = r = theta and rho0 = rho1 = rho.
absl::StatusOr<double> LogLrBoundSymmetric(double theta, double rho);
absl::StatusOr<double> LrBoundSymmetric(double theta, double rho);

// alpha_i(0) / alpha_i(1) and beta_i(0) / beta_i(1) at z = all-0, for a
// 1-based position i in a chain of length n.
struct RatioPair {
  double alpha_ratio;
  double beta_ratio;
};
absl::StatusOr<RatioPair> ClosedFormRatios(const BinaryMarkovChain& chain,
                                           const NoiseParams& noise,
                                           std::size_t i, std::size_t n);

// i* = round(n / 2 + log(gamma) / (2 log(sigma))), clamped to [1, n]. A
// fractional part of exactly one half rounds toward n / 2, and down when the
// offset is zero. max_lr is the closed-form ratio product at i*.
struct ArgmaxResult {
  std::size_t i_star;
  double max_lr;
};
absl::StatusOr<ArgmaxResult> ArgmaxIndex(const BinaryMarkovChain& chain,
                                         const NoiseParams& noise,
                                         std::size_t n);

// Worst-case loss factor for an adversary missing k contiguous tuples next to
// the target in a symmetric chain.
struct HProfile {
  std::vector<double> f;
  std::vector<double> g;
  std::vector<double> h;  // f[k] * g[k]
};
absl::StatusOr<HProfile> ComputeHProfile(double theta, double rho,
                                         std::size_t k_max);

// e^eps / (1 + e^eps).
double SuccessBoundDp(double epsilon);
// e^eps / (max(q/r, r/q) + e^eps).
absl::StatusOr<double> SuccessBoundBdp(const BinaryMarkovChain& chain,
                                       double epsilon);

}  // namespace bdp

#endif  // BDP_PRIVACY_BOUNDS_H_
