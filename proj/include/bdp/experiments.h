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

#ifndef BDP_EXPERIMENTS_H_
#define BDP_EXPERIMENTS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "bdp/attacks.h"
#include "bdp/bit_series.h"
#include "bdp/markov_chain.h"
#include "bdp/random.h"
#include "bdp/result_table.h"
#include "bdp/sanitizer.h"

namespace bdp {

// CSV headers of the emitted tables.
inline const std::vector<std::string> kSuccessColumns = {"theta", "suc_DP",
                                                         "suc_BDP"};
inline const std::vector<std::string> kChargedColumns = {"theta", "eps_DP",
                                                         "eps_BDP"};
inline const std::vector<std::string> kNoisePrivacyColumns = {
    "eps", "rho_zhao", "rho_closed_form", "rho_exact"};
inline const std::vector<std::string> kReconstructionColumns = {
    "eps", "viterbi_accuracy", "lstm_accuracy", "bdp_bound"};
inline const std::vector<std::string> kLstmColumns = {"eps", "lstm_accuracy"};
inline const std::vector<std::string> kRegionColumns = {"rho0", "rho1",
                                                        "feasible"};

// Inclusive arithmetic grid lo, lo + step, ..., hi.
std::vector<double> LinearGrid(double lo, double hi, double step);

// ln(p / (1 - p)) for 0 < p < 1.
absl::StatusOr<double> ChargedEpsilon(double success_probability);

// ---------------------------------------------------------------------------
// DP noise against single-bit and correlation-aware attackers.

struct DpInsufficiencyConfig {
  double epsilon = 0.5;
  std::vector<double> thetas = {0.0, 0.09, 0.185, 0.285, 0.385, 0.475};
  std::size_t n = 30;
  std::size_t target = 15;  // 1-based
  std::size_t databases = 100;
  std::size_t sanitizations = 1000;
  RandomSeed seed = 1;
  // Used in place of theta = 0 by the correlation-aware attacker, whose
  // inference needs a non-degenerate chain.
  double inference_theta_floor = 1e-6;
};

struct DpInsufficiencyRow {
  double theta;
  AttackReport single_bit;
  AttackReport correlation_aware;
  // Empty when the success rate is 0 or 1.
  std::optional<double> charged_single_bit;
  std::optional<double> charged_correlation_aware;
};

struct DpInsufficiencyResult {
  double rho;
  std::vector<DpInsufficiencyRow> rows;
  ResultTable SuccessTable() const;
  ResultTable ChargedTable() const;
};

absl::StatusOr<DpInsufficiencyResult> RunDpInsufficiency(
    const DpInsufficiencyConfig& config);

// ---------------------------------------------------------------------------
// Noise needed by three calibrations of a symmetric chain.

struct NoisePrivacyConfig {
  double theta = 0.35;
  std::size_t n = 30;
  std::vector<double> epsilons = LinearGrid(1.0, 4.0, 0.25);
};

struct NoisePrivacyRow {
  double epsilon;
  std::optional<double> rho_zhao;  // empty when eps_6 <= 0
  double rho_closed_form;
  double rho_exact;
};

absl::StatusOr<std::vector<NoisePrivacyRow>> RunNoisePrivacyComparison(
    const NoisePrivacyConfig& config);
ResultTable NoisePrivacyTable(const std::vector<NoisePrivacyRow>& rows);

// ---------------------------------------------------------------------------
// Viterbi reconstruction against the BDP success bound.

struct ReconstructionConfig {
  // Synthetic data parameters; ignored when `data` is set.
  double q = 0.0893;
  double r = 0.1092;
  std::size_t n = 26923;
  // Observed series. The chain is then estimated from it.
  std::optional<BitSeries> data;
  std::vector<double> epsilons = LinearGrid(1.0, 4.0, 0.25);
  // Independent sanitizations of the series per epsilon.
  std::size_t sanitizations = 1;
  RandomSeed seed = 1;
};

struct ReconstructionRow {
  double epsilon;
  NoiseParams noise;
  AttackReport viterbi;
  double bdp_bound;
};

struct ReconstructionResult {
  BinaryMarkovChain chain;
  bool estimate_clamped;
  std::vector<ReconstructionRow> rows;
  // lstm_accuracy is left empty.
  ResultTable Table() const;
};

absl::StatusOr<ReconstructionResult> RunReconstructionVsBound(
    const ReconstructionConfig& config);

// Fills the lstm_accuracy column of a reconstruction table from a CSV with
// header eps,lstm_accuracy. Rows are matched on eps to within 1e-9; rows
// without a match stay empty.
absl::Status MergeLstmColumn(ResultTable& table, absl::string_view lstm_csv);

// ---------------------------------------------------------------------------
// Feasible noise region.

// True when both likelihood-ratio bounds are at most e^eps.
absl::StatusOr<bool> IsFeasible(const BinaryMarkovChain& chain,
                                const NoiseParams& noise, double epsilon);

// Cell-centred grid rho_k = 0.5 (k + 0.5) / resolution in both coordinates,
// rho0 varying slowest. feasible is 1 or 0.
absl::StatusOr<ResultTable> FeasibleRegion(const BinaryMarkovChain& chain,
                                           double epsilon,
                                           std::size_t resolution);

}  // namespace bdp

#endif  // BDP_EXPERIMENTS_H_
