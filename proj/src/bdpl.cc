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

#include "bdp/bdpl.h"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "absl/strings/str_cat.h"
#include "bdp/hmm.h"
#include "bdp/status_macros.h"

namespace bdp {
namespace {

constexpr double kTieTolerance = 1e-12;

int BitAt(std::uint64_t x, std::size_t t, std::size_t n) {
  return static_cast<int>((x >> (n - 1 - t)) & 1U);
}

absl::Status CheckEnumerable(const BinaryMarkovChain& chain, std::size_t n) {
  if (n < 1 || n > kMaxBdplLength) {
    return absl::InvalidArgumentError(absl::StrCat(
        "exhaustive BDPL supports 1 <= n <= ", kMaxBdplLength, "; got ", n));
  }
  if (!(chain.q() > 0.0) || !(chain.r() > 0.0)) {
    return absl::InvalidArgumentError("BDPL requires q, r > 0");
  }
  return absl::OkStatus();
}

// Probabilities of every hidden sequence, indexed as in BitSeries::FromInteger.
std::vector<double> SequencePriors(const BinaryMarkovChain& chain,
                                   std::size_t n) {
  const std::array<double, 2> pi = *chain.Stationary();
  std::vector<double> prior(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < prior.size(); ++x) {
    double p = pi[BitAt(x, 0, n)];
    for (std::size_t t = 1; t < n; ++t) {
      p *= chain.Transition(BitAt(x, t - 1, n), BitAt(x, t, n));
    }
    prior[x] = p;
  }
  return prior;
}

// Group index of each hidden sequence: (x_K packed first-known-most-
// significant) * 2 + x_i.
std::vector<std::uint32_t> GroupKeys(const Adversary& adversary) {
  const std::size_t n = adversary.n();
  std::vector<std::uint32_t> keys(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < keys.size(); ++x) {
    std::uint32_t key = 0;
    for (std::size_t t : adversary.known()) key = (key << 1) | BitAt(x, t - 1, n);
    keys[x] = (key << 1) | BitAt(x, adversary.i() - 1, n);
  }
  return keys;
}

double Emissions(const NoiseParams& noise, std::uint64_t x, std::uint64_t z,
                 std::size_t n) {
  double p = 1.0;
  for (std::size_t t = 0; t < n; ++t) {
    p *= noise.Emission(BitAt(x, t, n), BitAt(z, t, n));
  }
  return p;
}

}  // namespace

absl::StatusOr<Adversary> Adversary::Create(std::size_t i,
                                            std::vector<std::size_t> known,
                                            std::size_t n) {
  if (i < 1 || i > n) {
    return absl::OutOfRangeError(absl::StrCat("target ", i, " outside [1, ", n, "]"));
  }
  std::sort(known.begin(), known.end());
  if (std::adjacent_find(known.begin(), known.end()) != known.end()) {
    return absl::InvalidArgumentError("duplicate known index");
  }
  for (std::size_t t : known) {
    if (t < 1 || t > n) {
      return absl::OutOfRangeError(absl::StrCat("known index ", t, " outside [1, ", n, "]"));
    }
    if (t == i) {
      return absl::InvalidArgumentError("target index cannot be known");
    }
  }
  return Adversary(i, std::move(known), n);
}

bool Adversary::IsKnown(std::size_t t) const {
  return std::binary_search(known_.begin(), known_.end(), t);
}

Adversary Adversary::Forget(std::size_t t) const {
  std::vector<std::size_t> rest;
  for (std::size_t k : known_) {
    if (k != t) rest.push_back(k);
  }
  return Adversary(i_, std::move(rest), n_);
}

absl::StatusOr<BdplResult> ExhaustiveBdpl(const BinaryMarkovChain& chain,
                                          const NoiseParams& noise,
                                          const Adversary& adversary) {
  const std::size_t n = adversary.n();
  RETURN_IF_ERROR(CheckEnumerable(chain, n));
  const std::vector<double> prior = SequencePriors(chain, n);
  const std::vector<std::uint32_t> keys = GroupKeys(adversary);
  const std::size_t groups = std::size_t{2} << adversary.known().size();

  std::vector<double> prior_mass(groups, 0.0);
  for (std::uint64_t x = 0; x < prior.size(); ++x) prior_mass[keys[x]] += prior[x];

  BdplResult result;
  result.log_bdpl_by_state[0] = -INFINITY;
  result.log_bdpl_by_state[1] = -INFINITY;
  double best = -INFINITY;
  std::uint64_t best_z = 0, best_k = 0;
  int best_x = 0;
  std::vector<double> mass(groups);
  for (std::uint64_t z = 0; z < prior.size(); ++z) {
    std::fill(mass.begin(), mass.end(), 0.0);
    for (std::uint64_t x = 0; x < prior.size(); ++x) {
      mass[keys[x]] += prior[x] * Emissions(noise, x, z, n);
    }
    for (std::uint64_t k = 0; k < groups / 2; ++k) {
      const double log_given0 =
          std::log(mass[2 * k]) - std::log(prior_mass[2 * k]);
      const double log_given1 =
          std::log(mass[2 * k + 1]) - std::log(prior_mass[2 * k + 1]);
      const double by_state[2] = {log_given0 - log_given1,
                                  log_given1 - log_given0};
      for (int x = 0; x < 2; ++x) {
        result.log_bdpl_by_state[x] =
            std::max(result.log_bdpl_by_state[x], by_state[x]);
        if (by_state[x] > best + kTieTolerance) {
          best = by_state[x];
          best_z = z;
          best_k = k;
          best_x = x;
        }
      }
    }
  }
  result.x_i = best_x;
  result.z = BitSeries::FromInteger(best_z, n);
  const std::size_t m = adversary.known().size();
  for (std::size_t j = 0; j < m; ++j) {
    result.known_values.push_back(static_cast<int>((best_k >> (m - 1 - j)) & 1U));
  }
  return result;
}

absl::StatusOr<double> AllZeroLogLoss(const BinaryMarkovChain& chain,
                                      const NoiseParams& noise,
                                      const Adversary& adversary) {
  const std::size_t n = adversary.n();
  RETURN_IF_ERROR(CheckEnumerable(chain, n));
  const std::vector<double> prior = SequencePriors(chain, n);
  const std::vector<std::uint32_t> keys = GroupKeys(adversary);
  double mass[2] = {0.0, 0.0};
  double prior_mass[2] = {0.0, 0.0};
  for (std::uint64_t x = 0; x < prior.size(); ++x) {
    if (keys[x] > 1) continue;  // some known tuple is 1
    prior_mass[keys[x]] += prior[x];
    mass[keys[x]] += prior[x] * Emissions(noise, x, 0, n);
  }
  return (std::log(mass[0]) - std::log(prior_mass[0])) -
         (std::log(mass[1]) - std::log(prior_mass[1]));
}

absl::StatusOr<double> CorrelatedIgnorantLogBdpl(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    std::size_t n) {
  RETURN_IF_ERROR(CheckEnumerable(chain, n));
  double best = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    ASSIGN_OR_RETURN(std::vector<LogPair> ll,
                     CorrelatedLogLikelihoods(chain, noise,
                                              BitSeries::FromInteger(v, n)));
    for (const LogPair& row : ll) best = std::max(best, std::abs(row[0] - row[1]));
  }
  return best;
}

absl::StatusOr<double> IndependentIgnorantLogBdpl(
    const BinaryMarkovChain& chain, const NoiseParams& noise, std::size_t n) {
  RETURN_IF_ERROR(CheckEnumerable(chain, n));
  double best = 0.0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    ASSIGN_OR_RETURN(LikelihoodTables tables,
                     ComputeTables(chain, noise, BitSeries::FromInteger(v, n)));
    for (std::size_t i = 1; i <= n; ++i) {
      best = std::max(best, std::abs(tables.LogLikelihood(i, 0) -
                                     tables.LogLikelihood(i, 1)));
    }
  }
  return best;
}

}  // namespace bdp
