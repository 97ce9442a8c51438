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

#include "bdp/hmm.h"

#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "bdp/log_math.h"
#include "bdp/status_macros.h"

namespace bdp {
namespace {

absl::Status CheckInferenceDomain(const BinaryMarkovChain& chain,
                                  const BitSeries& z) {
  if (!(chain.q() > 0.0) || !(chain.r() > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("inference requires 0 < q, r < 0.5; got q=", chain.q(),
                     " r=", chain.r()));
  }
  if (z.empty()) return absl::InvalidArgumentError("empty observation series");
  // The forward recurrence uses P(x, x') for the backward-in-time step.
  if (!IsReversible(chain)) {
    return absl::InternalError("chain is not reversible");
  }
  return absl::OkStatus();
}

absl::Status CheckPosition(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) {
    return absl::OutOfRangeError(
        absl::StrCat("position ", i, " outside [1, ", n, "]"));
  }
  return absl::OkStatus();
}

struct LogModel {
  double log_p[2][2];
  double log_b[2][2];
  double log_pi[2];
};

LogModel MakeLogModel(const BinaryMarkovChain& chain,
                      const NoiseParams& noise) {
  LogModel m;
  const std::array<double, 2> pi = *chain.Stationary();
  for (int x = 0; x < 2; ++x) {
    m.log_pi[x] = SafeLog(pi[x]);
    for (int y = 0; y < 2; ++y) {
      m.log_p[x][y] = SafeLog(chain.Transition(x, y));
      m.log_b[x][y] = SafeLog(noise.Emission(x, y));
    }
  }
  return m;
}

}  // namespace

absl::StatusOr<std::vector<LogPair>> Forward(const BinaryMarkovChain& chain,
                                             const NoiseParams& noise,
                                             const BitSeries& z) {
  RETURN_IF_ERROR(CheckInferenceDomain(chain, z));
  const LogModel m = MakeLogModel(chain, noise);
  const std::size_t n = z.size();
  std::vector<LogPair> alpha(n + 1);
  alpha[0] = {0.0, 0.0};
  for (std::size_t t = 1; t <= n; ++t) {
    for (int x = 0; x < 2; ++x) {
      const double mix = LogAddExp(m.log_p[x][0] + alpha[t - 1][0],
                                   m.log_p[x][1] + alpha[t - 1][1]);
      alpha[t][x] = m.log_b[x][z[t - 1]] + mix;
    }
  }
  return alpha;
}

absl::StatusOr<std::vector<LogPair>> Backward(const BinaryMarkovChain& chain,
                                              const NoiseParams& noise,
                                              const BitSeries& z) {
  RETURN_IF_ERROR(CheckInferenceDomain(chain, z));
  const LogModel m = MakeLogModel(chain, noise);
  const std::size_t n = z.size();
  std::vector<LogPair> beta(n + 1, LogPair{kLogZero, kLogZero});
  beta[n] = {0.0, 0.0};
  for (std::size_t t = n - 1; t >= 1; --t) {
    const int next = z[t];  // z_{t+1}
    for (int x = 0; x < 2; ++x) {
      beta[t][x] =
          LogAddExp(m.log_p[x][0] + m.log_b[0][next] + beta[t + 1][0],
                    m.log_p[x][1] + m.log_b[1][next] + beta[t + 1][1]);
    }
  }
  return beta;
}

absl::StatusOr<LikelihoodTables> ComputeTables(const BinaryMarkovChain& chain,
                                               const NoiseParams& noise,
                                               const BitSeries& z) {
  ASSIGN_OR_RETURN(std::vector<LogPair> alpha, Forward(chain, noise, z));
  ASSIGN_OR_RETURN(std::vector<LogPair> beta, Backward(chain, noise, z));
  return LikelihoodTables(std::move(alpha), std::move(beta));
}

absl::StatusOr<double> LogLikelihoodGivenState(const BinaryMarkovChain& chain,
                                               const NoiseParams& noise,
                                               const BitSeries& z,
                                               std::size_t i, int x) {
  RETURN_IF_ERROR(CheckPosition(i, z.size()));
  ASSIGN_OR_RETURN(LikelihoodTables tables, ComputeTables(chain, noise, z));
  return tables.LogLikelihood(i, x);
}

absl::StatusOr<std::array<double, 2>> Posterior(const BinaryMarkovChain& chain,
                                                const NoiseParams& noise,
                                                const BitSeries& z,
                                                std::size_t i) {
  RETURN_IF_ERROR(CheckPosition(i, z.size()));
  ASSIGN_OR_RETURN(LikelihoodTables tables, ComputeTables(chain, noise, z));
  const std::array<double, 2> pi = *chain.Stationary();
  const double w0 = std::log(pi[0]) + tables.LogLikelihood(i, 0);
  const double w1 = std::log(pi[1]) + tables.LogLikelihood(i, 1);
  const double total = LogAddExp(w0, w1);
  if (total == kLogZero) {
    return absl::FailedPreconditionError("observation has probability zero");
  }
  const double p1 = std::exp(w1 - total);
  return std::array<double, 2>{std::exp(w0 - total), p1};
}

absl::StatusOr<BitSeries> Viterbi(const BinaryMarkovChain& chain,
                                  const NoiseParams& noise,
                                  const BitSeries& z) {
  RETURN_IF_ERROR(CheckInferenceDomain(chain, z));
  const LogModel m = MakeLogModel(chain, noise);
  const std::size_t n = z.size();
  // best[t][x]: best log-score of positions t+2..n (1-based) given
  // X_{t+1} = x, emissions included.
  std::vector<LogPair> best(n, LogPair{0.0, 0.0});
  for (std::size_t t = n - 1; t-- > 0;) {
    const int next = z[t + 1];
    for (int x = 0; x < 2; ++x) {
      best[t][x] = std::max(m.log_p[x][0] + m.log_b[0][next] + best[t + 1][0],
                            m.log_p[x][1] + m.log_b[1][next] + best[t + 1][1]);
    }
  }
  // Forward traceback; a strict comparison keeps 0 on ties.
  BitSeries path = BitSeries::Zeros(n);
  const double start0 = m.log_pi[0] + m.log_b[0][z[0]] + best[0][0];
  const double start1 = m.log_pi[1] + m.log_b[1][z[0]] + best[0][1];
  int x = start1 > start0 ? 1 : 0;
  path.Set(0, x);
  for (std::size_t t = 1; t < n; ++t) {
    const int obs = z[t];
    const double to0 = m.log_p[x][0] + m.log_b[0][obs] + best[t][0];
    const double to1 = m.log_p[x][1] + m.log_b[1][obs] + best[t][1];
    x = to1 > to0 ? 1 : 0;
    path.Set(t, x);
  }
  return path;
}

absl::StatusOr<double> LogJointProbability(const BinaryMarkovChain& chain,
                                           const NoiseParams& noise,
                                           const BitSeries& x,
                                           const BitSeries& z) {
  if (x.size() != z.size()) {
    return absl::InvalidArgumentError("hidden and observed lengths differ");
  }
  RETURN_IF_ERROR(CheckInferenceDomain(chain, z));
  const LogModel m = MakeLogModel(chain, noise);
  double total = m.log_pi[x[0]] + m.log_b[x[0]][z[0]];
  for (std::size_t t = 1; t < x.size(); ++t) {
    total += m.log_p[x[t - 1]][x[t]] + m.log_b[x[t]][z[t]];
  }
  return total;
}

absl::StatusOr<std::vector<LogPair>> CorrelatedLogLikelihoods(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    const BitSeries& z) {
  RETURN_IF_ERROR(CheckInferenceDomain(chain, z));
  const std::size_t n = z.size();
  const std::array<double, 2> pi = *chain.Stationary();
  const double pi_noise[2] = {1.0 - noise.StationaryOne(),
                              noise.StationaryOne()};
  double log_p[2][2], log_pn[2][2];
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      log_p[a][b] = std::log(chain.Transition(a, b));
      log_pn[a][b] = std::log(noise.Transition(a, b));
    }
  }
  // State at time t is X_t = x; the noise state is forced to x ^ z_t.
  // f[t][x] = log Pr[Z_{1:t+1}, X_{t+1} = x], b[t][x] = log Pr[Z_{t+2:n} |
  // X_{t+1} = x, Y_{t+1} = x ^ z_{t+1}] (0-based rows).
  std::vector<LogPair> f(n), b(n, LogPair{0.0, 0.0});
  for (int x = 0; x < 2; ++x) {
    f[0][x] = std::log(pi[x]) + std::log(pi_noise[x ^ z[0]]);
  }
  for (std::size_t t = 1; t < n; ++t) {
    for (int x = 0; x < 2; ++x) {
      const int y = x ^ z[t];
      f[t][x] = LogAddExp(
          f[t - 1][0] + log_p[0][x] + log_pn[0 ^ z[t - 1]][y],
          f[t - 1][1] + log_p[1][x] + log_pn[1 ^ z[t - 1]][y]);
    }
  }
  for (std::size_t t = n - 1; t-- > 0;) {
    for (int x = 0; x < 2; ++x) {
      const int y = x ^ z[t];
      b[t][x] = LogAddExp(
          log_p[x][0] + log_pn[y][0 ^ z[t + 1]] + b[t + 1][0],
          log_p[x][1] + log_pn[y][1 ^ z[t + 1]] + b[t + 1][1]);
    }
  }
  std::vector<LogPair> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (int x = 0; x < 2; ++x) {
      out[t][x] = f[t][x] + b[t][x] - std::log(pi[x]);
    }
  }
  return out;
}

absl::StatusOr<double> CorrelatedLogLikelihood(
    const BinaryMarkovChain& chain, const CorrelatedNoiseChain& noise,
    const BitSeries& z, std::size_t i, int x) {
  RETURN_IF_ERROR(CheckPosition(i, z.size()));
  ASSIGN_OR_RETURN(std::vector<LogPair> all,
                   CorrelatedLogLikelihoods(chain, noise, z));
  return all[i - 1][x];
}

}  // namespace bdp
