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

#include "bdp/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>
#include <utility>

#include "absl/strings/str_cat.h"
#include "bdp/calibration.h"
#include "bdp/hmm.h"
#include "bdp/privacy_bounds.h"
#include "bdp/status_macros.h"

namespace bdp {
namespace {

// Runs body(k) for k in [0, count). Every k writes only to its own slot, so
// results do not depend on scheduling.
void ParallelFor(std::size_t count,
                 const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(
      count, std::max(1U, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) body(k);
    });
  }
  for (std::thread& t : pool) t.join();
}

// First error among per-slot statuses, in slot order.
absl::Status FirstError(const std::vector<absl::Status>& statuses) {
  for (const absl::Status& s : statuses) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

// Symmetric chain sample that also covers theta = 0, where the chain never
// moves and the first state is a fair coin.
absl::StatusOr<BitSeries> SampleSymmetric(double theta, std::size_t n,
                                          RandomSeed seed) {
  if (theta == 0.0) {
    Rng rng(seed);
    BitSeries out = BitSeries::Zeros(n);
    const int bit = rng.Bernoulli(0.5) ? 1 : 0;
    for (std::size_t t = 0; t < n; ++t) out.Set(t, bit);
    return out;
  }
  ASSIGN_OR_RETURN(BinaryMarkovChain chain, BinaryMarkovChain::Symmetric(theta));
  return Sample(chain, n, seed);
}

std::optional<double> OptionalCharged(double p) {
  absl::StatusOr<double> eps = ChargedEpsilon(p);
  if (!eps.ok()) return std::nullopt;
  return *eps;
}

}  // namespace

std::vector<double> LinearGrid(double lo, double hi, double step) {
  std::vector<double> grid;
  if (!(step > 0.0) || hi < lo) return grid;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::size_t k = 0; k <= count; ++k) grid.push_back(lo + step * k);
  return grid;
}

absl::StatusOr<double> ChargedEpsilon(double success_probability) {
  if (!(success_probability > 0.0 && success_probability < 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "charged epsilon needs 0 < p < 1; got ", success_probability));
  }
  return std::log(success_probability) - std::log1p(-success_probability);
}

ResultTable DpInsufficiencyResult::SuccessTable() const {
  ResultTable table(kSuccessColumns);
  for (const DpInsufficiencyRow& row : rows) {
    table.AddRow({row.theta, row.single_bit.accuracy,
                  row.correlation_aware.accuracy})
        .IgnoreError();
  }
  return table;
}

ResultTable DpInsufficiencyResult::ChargedTable() const {
  ResultTable table(kChargedColumns);
  for (const DpInsufficiencyRow& row : rows) {
    table.AddRow({row.theta, row.charged_single_bit,
                  row.charged_correlation_aware})
        .IgnoreError();
  }
  return table;
}

absl::StatusOr<DpInsufficiencyResult> RunDpInsufficiency(
    const DpInsufficiencyConfig& config) {
  if (config.thetas.empty()) return absl::InvalidArgumentError("empty theta grid");
  for (double theta : config.thetas) {
    if (!(theta >= 0.0 && theta < 0.5)) {
      return absl::InvalidArgumentError(
          absl::StrCat("theta must lie in [0, 0.5); got ", theta));
    }
  }
  if (config.n < 1 || config.target < 1 || config.target > config.n) {
    return absl::InvalidArgumentError("target must lie in [1, n]");
  }
  if (config.databases < 1 || config.sanitizations < 1) {
    return absl::InvalidArgumentError("replicate counts must be at least 1");
  }
  ASSIGN_OR_RETURN(double rho, DpNoise(config.epsilon));
  ASSIGN_OR_RETURN(NoiseParams noise, NoiseParams::Symmetric(rho));

  DpInsufficiencyResult result{rho, {}};
  for (double theta : config.thetas) {
    ASSIGN_OR_RETURN(BinaryMarkovChain inference_chain,
                     BinaryMarkovChain::Symmetric(
                         std::max(theta, config.inference_theta_floor)));
    const std::size_t per_db = config.sanitizations;
    std::vector<std::uint8_t> sb(config.databases * per_db);
    std::vector<std::uint8_t> ca(config.databases * per_db);
    std::vector<absl::Status> statuses(config.databases);
    ParallelFor(config.databases, [&](std::size_t d) {
      const RandomSeed db_seed = DeriveSeed(config.seed, d);
      absl::StatusOr<BitSeries> x =
          SampleSymmetric(theta, config.n, DeriveSeed(db_seed, 0));
      if (!x.ok()) {
        statuses[d] = x.status();
        return;
      }
      const int truth = (*x)[config.target - 1];
      for (std::size_t s = 0; s < per_db; ++s) {
        const BitSeries z =
            SanitizeIndependent(*x, noise, DeriveSeed(db_seed, s + 1));
        absl::StatusOr<int> ca_guess =
            AttackCorrelationAware(inference_chain, noise, z, config.target);
        if (!ca_guess.ok()) {
          statuses[d] = ca_guess.status();
          return;
        }
        sb[d * per_db + s] = z[config.target - 1] == truth ? 1 : 0;
        ca[d * per_db + s] = *ca_guess == truth ? 1 : 0;
      }
    });
    RETURN_IF_ERROR(FirstError(statuses));
    DpInsufficiencyRow row{theta, Summarize("single_bit", std::move(sb)),
                           Summarize("correlation_aware", std::move(ca)),
                           std::nullopt, std::nullopt};
    row.charged_single_bit = OptionalCharged(row.single_bit.accuracy);
    row.charged_correlation_aware =
        OptionalCharged(row.correlation_aware.accuracy);
    result.rows.push_back(std::move(row));
  }
  return result;
}

absl::StatusOr<std::vector<NoisePrivacyRow>> RunNoisePrivacyComparison(
    const NoisePrivacyConfig& config) {
  if (config.epsilons.empty()) {
    return absl::InvalidArgumentError("empty epsilon grid");
  }
  std::vector<NoisePrivacyRow> rows;
  for (double eps : config.epsilons) {
    ASSIGN_OR_RETURN(ZhaoNoise zhao, ZhaoEps6Noise(config.theta, eps, config.n));
    ASSIGN_OR_RETURN(double closed, RhoSufficientSymmetric(config.theta, eps));
    ASSIGN_OR_RETURN(double exact, CalibrateSymmetricExact(config.theta, eps));
    rows.push_back({eps, zhao.defined ? std::optional<double>(zhao.rho)
                                      : std::nullopt,
                    closed, exact});
  }
  return rows;
}

ResultTable NoisePrivacyTable(const std::vector<NoisePrivacyRow>& rows) {
  ResultTable table(kNoisePrivacyColumns);
  for (const NoisePrivacyRow& row : rows) {
    table.AddRow({row.epsilon, row.rho_zhao, row.rho_closed_form,
                  row.rho_exact})
        .IgnoreError();
  }
  return table;
}

ResultTable ReconstructionResult::Table() const {
  ResultTable table(kReconstructionColumns);
  for (const ReconstructionRow& row : rows) {
    table.AddRow({row.epsilon, row.viterbi.accuracy, std::nullopt,
                  row.bdp_bound})
        .IgnoreError();
  }
  return table;
}

absl::StatusOr<ReconstructionResult> RunReconstructionVsBound(
    const ReconstructionConfig& config) {
  if (config.epsilons.empty()) {
    return absl::InvalidArgumentError("empty epsilon grid");
  }
  if (config.sanitizations < 1) {
    return absl::InvalidArgumentError("replicate count must be at least 1");
  }
  for (double eps : config.epsilons) {
    RETURN_IF_ERROR(PrivacyBudget::Create(eps).status());
  }
  std::optional<BinaryMarkovChain> chain;
  bool clamped = false;
  BitSeries x;
  if (config.data.has_value()) {
    ASSIGN_OR_RETURN(ChainEstimate estimate, Estimate(*config.data));
    chain = estimate.chain;
    clamped = estimate.clamped;
    x = *config.data;
  } else {
    ASSIGN_OR_RETURN(chain, BinaryMarkovChain::Create(config.q, config.r));
    if (!(config.q > 0.0) || !(config.r > 0.0)) {
      return absl::InvalidArgumentError("synthetic chain needs q, r > 0");
    }
    ASSIGN_OR_RETURN(x, Sample(*chain, config.n, DeriveSeed(config.seed, 0)));
  }

  const std::size_t m = config.epsilons.size();
  std::vector<std::optional<ReconstructionRow>> rows(m);
  std::vector<absl::Status> statuses(m);
  ParallelFor(m, [&](std::size_t e) {
    const double eps = config.epsilons[e];
    statuses[e] = [&]() -> absl::Status {
      ASSIGN_OR_RETURN(AsymmetricCalibration cal, CalibrateAsymmetric(*chain, eps));
      ASSIGN_OR_RETURN(double bound, SuccessBoundBdp(*chain, eps));
      const RandomSeed eps_seed = DeriveSeed(config.seed, e + 1);
      std::vector<std::uint8_t> hits;
      hits.reserve(x.size() * config.sanitizations);
      for (std::size_t s = 0; s < config.sanitizations; ++s) {
        const BitSeries z =
            SanitizeIndependent(x, cal.noise, DeriveSeed(eps_seed, s));
        ASSIGN_OR_RETURN(BitSeries guess, AttackViterbi(*chain, cal.noise, z));
        ASSIGN_OR_RETURN(AttackReport one, Evaluate("viterbi", x, guess));
        hits.insert(hits.end(), one.indicators.begin(), one.indicators.end());
      }
      rows[e] = ReconstructionRow{eps, cal.noise,
                                  Summarize("viterbi", std::move(hits)), bound};
      return absl::OkStatus();
    }();
  });
  RETURN_IF_ERROR(FirstError(statuses));
  ReconstructionResult result{*chain, clamped, {}};
  for (auto& row : rows) result.rows.push_back(std::move(*row));
  return result;
}

absl::Status MergeLstmColumn(ResultTable& table, absl::string_view lstm_csv) {
  ASSIGN_OR_RETURN(std::size_t eps_col, table.ColumnIndex("eps"));
  ASSIGN_OR_RETURN(std::size_t lstm_col, table.ColumnIndex("lstm_accuracy"));
  ASSIGN_OR_RETURN(ResultTable lstm, ParseCsvWithSchema(lstm_csv, kLstmColumns));
  for (std::size_t r = 0; r < table.num_rows(); ++r) {
    const Cell eps = table.Get(r, eps_col);
    if (!eps.has_value()) continue;
    for (std::size_t k = 0; k < lstm.num_rows(); ++k) {
      const Cell other = lstm.Get(k, 0);
      if (other.has_value() && std::abs(*other - *eps) <= 1e-9) {
        table.Set(r, lstm_col, lstm.Get(k, 1));
        break;
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<bool> IsFeasible(const BinaryMarkovChain& chain,
                                const NoiseParams& noise, double epsilon) {
  RETURN_IF_ERROR(PrivacyBudget::Create(epsilon).status());
  ASSIGN_OR_RETURN(LrBounds bounds, LrBound(chain, noise));
  return bounds.LogMax() <= epsilon;
}

absl::StatusOr<ResultTable> FeasibleRegion(const BinaryMarkovChain& chain,
                                           double epsilon,
                                           std::size_t resolution) {
  if (resolution < 1) return absl::InvalidArgumentError("resolution must be >= 1");
  ResultTable table(kRegionColumns);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double rho0 = 0.5 * (i + 0.5) / resolution;
    for (std::size_t j = 0; j < resolution; ++j) {
      const double rho1 = 0.5 * (j + 0.5) / resolution;
      ASSIGN_OR_RETURN(NoiseParams noise, NoiseParams::Create(rho0, rho1));
      ASSIGN_OR_RETURN(bool feasible, IsFeasible(chain, noise, epsilon));
      RETURN_IF_ERROR(table.AddRow({rho0, rho1, feasible ? 1.0 : 0.0}));
    }
  }
  return table;
}

}  // namespace bdp
