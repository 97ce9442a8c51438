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

#include "bdp/attacks.h"

#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "bdp/hmm.h"
#include "bdp/status_macros.h"

namespace bdp {
namespace {

absl::Status CheckPosition(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) {
    return absl::OutOfRangeError(
        absl::StrCat("position ", i, " outside [1, ", n, "]"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<int> AttackSingleBit(const BitSeries& z, std::size_t i) {
  RETURN_IF_ERROR(CheckPosition(i, z.size()));
  return z[i - 1];
}

absl::StatusOr<int> AttackCorrelationAware(const BinaryMarkovChain& chain,
                                           const NoiseParams& noise,
                                           const BitSeries& z, std::size_t i) {
  ASSIGN_OR_RETURN(auto posterior, Posterior(chain, noise, z, i));
  return posterior[1] > posterior[0] ? 1 : 0;
}

absl::StatusOr<BitSeries> AttackCorrelationAwareAll(
    const BinaryMarkovChain& chain, const NoiseParams& noise,
    const BitSeries& z) {
  ASSIGN_OR_RETURN(LikelihoodTables tables, ComputeTables(chain, noise, z));
  const std::array<double, 2> pi = *chain.Stationary();
  const double log_prior_odds = std::log(pi[1]) - std::log(pi[0]);
  BitSeries out = BitSeries::Zeros(z.size());
  for (std::size_t i = 1; i <= z.size(); ++i) {
    const double log_odds = log_prior_odds + tables.LogLikelihood(i, 1) -
                            tables.LogLikelihood(i, 0);
    out.Set(i - 1, log_odds > 0.0 ? 1 : 0);
  }
  return out;
}

absl::StatusOr<BitSeries> AttackViterbi(const BinaryMarkovChain& chain,
                                        const NoiseParams& noise,
                                        const BitSeries& z) {
  return Viterbi(chain, noise, z);
}

AttackReport Summarize(std::string name, std::vector<std::uint8_t> indicators) {
  AttackReport report;
  report.name = std::move(name);
  std::size_t hits = 0;
  for (std::uint8_t v : indicators) hits += v;
  const double trials = static_cast<double>(indicators.size());
  if (trials > 0) {
    report.accuracy = hits / trials;
    report.standard_error =
        std::sqrt(report.accuracy * (1.0 - report.accuracy) / trials);
  }
  report.indicators = std::move(indicators);
  return report;
}

absl::StatusOr<AttackReport> Evaluate(std::string name, const BitSeries& truth,
                                      const BitSeries& guesses) {
  if (truth.size() != guesses.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("length mismatch: ", truth.size(), " vs ", guesses.size()));
  }
  std::vector<std::uint8_t> hits(truth.size());
  for (std::size_t t = 0; t < truth.size(); ++t) {
    hits[t] = truth[t] == guesses[t] ? 1 : 0;
  }
  return Summarize(std::move(name), std::move(hits));
}

absl::StatusOr<AttackReport> Evaluate(std::string name, const BitSeries& truth,
                                      std::size_t i, int guess) {
  RETURN_IF_ERROR(CheckPosition(i, truth.size()));
  return Summarize(std::move(name), {truth[i - 1] == guess ? std::uint8_t{1}
                                                           : std::uint8_t{0}});
}

}  // namespace bdp
