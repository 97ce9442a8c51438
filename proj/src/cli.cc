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

#include "bdp/cli.h"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "bdp/attacks.h"
#include "bdp/bit_series.h"
#include "bdp/calibration.h"
#include "bdp/experiments.h"
#include "bdp/markov_chain.h"
#include "bdp/privacy_bounds.h"
#include "bdp/result_table.h"
#include "bdp/sanitizer.h"
#include "bdp/status_macros.h"

namespace bdp {
namespace {

std::string Num(double v) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, ptr);
}

struct Flags {
  double q = 0.0;
  double r = 0.0;
  double theta = 0.0;
  double eps = 0.0;
  double rho0 = 0.0;
  double rho1 = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
  std::string out_dir;
  std::string mode;
  std::size_t replicates = 0;
  std::string lstm;
  std::string figure;
};

// One parsed invocation: which subcommand ran and which flags were given.
class Invocation {
 public:
  Invocation(const CLI::App* sub, Flags flags)
      : sub_(sub), flags_(std::move(flags)) {}

  const Flags& flags() const { return flags_; }
  std::string name() const { return sub_->get_name(); }
  bool Has(const std::string& flag) const {
    return sub_->get_option_no_throw("--" + flag) != nullptr &&
           sub_->count("--" + flag) > 0;
  }

  // "bdp <sub> key=value ..." with every given flag plus resolved values.
  std::string Describe(
      const std::vector<std::pair<std::string, std::string>>& resolved) const {
    std::vector<std::string> parts = {"bdp", name()};
    if (!flags_.figure.empty()) parts.push_back(flags_.figure);
    for (const CLI::Option* opt : sub_->get_options()) {
      if (opt->get_single_name() == "help" || opt->count() == 0) continue;
      parts.push_back(absl::StrCat(opt->get_single_name(), "=",
                                   opt->as<std::string>()));
    }
    for (const auto& [key, value] : resolved) {
      if (Has(key)) continue;
      parts.push_back(absl::StrCat(key, "=", value));
    }
    return absl::StrJoin(parts, " ");
  }

 private:
  const CLI::App* sub_;
  Flags flags_;
};

// Chain from --theta or --q/--r. Returns nullopt when neither is given.
absl::StatusOr<std::optional<BinaryMarkovChain>> ChainFromFlags(
    const Invocation& inv) {
  const bool has_theta = inv.Has("theta");
  const bool has_q = inv.Has("q");
  const bool has_r = inv.Has("r");
  if (has_theta && (has_q || has_r)) {
    return absl::InvalidArgumentError("give either --theta or --q/--r, not both");
  }
  if (has_q != has_r) {
    return absl::InvalidArgumentError("--q and --r must be given together");
  }
  if (has_theta) {
    ASSIGN_OR_RETURN(BinaryMarkovChain chain,
                     BinaryMarkovChain::Symmetric(inv.flags().theta));
    return std::optional<BinaryMarkovChain>(chain);
  }
  if (has_q) {
    ASSIGN_OR_RETURN(BinaryMarkovChain chain,
                     BinaryMarkovChain::Create(inv.flags().q, inv.flags().r));
    return std::optional<BinaryMarkovChain>(chain);
  }
  return std::optional<BinaryMarkovChain>();
}

absl::StatusOr<BinaryMarkovChain> RequireChain(const Invocation& inv) {
  ASSIGN_OR_RETURN(std::optional<BinaryMarkovChain> chain, ChainFromFlags(inv));
  if (!chain.has_value()) {
    return absl::InvalidArgumentError("missing chain: give --theta or --q/--r");
  }
  return *chain;
}

// Explicit --rho0/--rho1, or nullopt. Both or neither.
absl::StatusOr<std::optional<std::pair<double, double>>> ExplicitNoise(
    const Invocation& inv) {
  const bool has0 = inv.Has("rho0");
  const bool has1 = inv.Has("rho1");
  if (has0 != has1) {
    return absl::InvalidArgumentError("--rho0 and --rho1 must be given together");
  }
  if (!has0) return std::optional<std::pair<double, double>>();
  if (inv.Has("eps")) {
    return absl::InvalidArgumentError(
        "give either --eps or explicit --rho0/--rho1, not both");
  }
  return std::optional<std::pair<double, double>>(
      std::make_pair(inv.flags().rho0, inv.flags().rho1));
}

// Minimal noise for the chain at --eps. Symmetric chains use the exact
// symmetric calibration.
absl::StatusOr<NoiseParams> CalibratedNoise(const BinaryMarkovChain& chain,
                                            double eps) {
  if (chain.IsSymmetric()) {
    ASSIGN_OR_RETURN(double rho, CalibrateSymmetricExact(chain.q(), eps));
    return NoiseParams::Symmetric(rho);
  }
  ASSIGN_OR_RETURN(AsymmetricCalibration cal, CalibrateAsymmetric(chain, eps));
  return cal.noise;
}

// Noise from explicit flags, or calibrated from --eps.
absl::StatusOr<NoiseParams> ResolveNoise(const Invocation& inv,
                                         const std::optional<BinaryMarkovChain>& chain) {
  ASSIGN_OR_RETURN(auto explicit_noise, ExplicitNoise(inv));
  if (explicit_noise.has_value()) {
    return NoiseParams::Create(explicit_noise->first, explicit_noise->second);
  }
  if (!inv.Has("eps")) {
    return absl::InvalidArgumentError("missing noise: give --eps or --rho0/--rho1");
  }
  if (!chain.has_value()) {
    return absl::InvalidArgumentError("--eps needs a chain (--theta or --q/--r)");
  }
  return CalibratedNoise(*chain, inv.flags().eps);
}

absl::Status WriteOutput(const Invocation& inv, std::ostream& out,
                         const std::string& contents) {
  if (inv.Has("out")) return WriteFileAtomically(inv.flags().out, contents);
  out << contents;
  return absl::OkStatus();
}

absl::Status RunCalibrate(const Invocation& inv, std::ostream& out,
                          std::ostream& err) {
  const Flags& f = inv.flags();
  if (!inv.Has("eps")) return absl::InvalidArgumentError("calibrate needs --eps");
  const std::string mode = inv.Has("mode") ? f.mode : "exact";
  if (mode == "dp") {
    ASSIGN_OR_RETURN(double rho, DpNoise(f.eps));
    err << inv.Describe({{"mode", mode}}) << "\n";
    out << Num(rho) << "\n";
    return absl::OkStatus();
  }
  ASSIGN_OR_RETURN(BinaryMarkovChain chain, RequireChain(inv));
  if (!chain.IsSymmetric()) {
    if (mode != "exact") {
      return absl::InvalidArgumentError(
          absl::StrCat("mode '", mode, "' needs a symmetric chain"));
    }
    ASSIGN_OR_RETURN(AsymmetricCalibration cal, CalibrateAsymmetric(chain, f.eps));
    err << inv.Describe({{"mode", mode}}) << "\n";
    out << Num(cal.noise.rho0()) << " " << Num(cal.noise.rho1()) << "\n";
    return absl::OkStatus();
  }
  const double theta = chain.q();
  double rho = 0.0;
  if (mode == "exact") {
    ASSIGN_OR_RETURN(rho, CalibrateSymmetricExact(theta, f.eps));
  } else if (mode == "closed_form") {
    ASSIGN_OR_RETURN(rho, RhoSufficientSymmetric(theta, f.eps));
  } else if (mode == "zhao3" || mode == "zhao3_substituted") {
    ASSIGN_OR_RETURN(ZhaoNoise z, mode == "zhao3"
                                      ? ZhaoEps3NoisePrinted(theta, f.eps)
                                      : ZhaoEps3NoiseSubstituted(theta, f.eps));
    if (!z.defined) {
      err << "warning: eps_3 = " << Num(z.effective_epsilon)
          << " <= 0; the reduction gives no guarantee here\n";
    }
    rho = z.rho;
  } else if (mode == "zhao6") {
    if (!inv.Has("n")) return absl::InvalidArgumentError("mode zhao6 needs --n");
    ASSIGN_OR_RETURN(ZhaoNoise z, ZhaoEps6Noise(theta, f.eps, f.n));
    if (!z.defined) {
      return absl::FailedPreconditionError(absl::StrCat(
          "budget too small: eps_6 = ", Num(z.effective_epsilon), " <= 0"));
    }
    rho = z.rho;
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown mode '", mode, "'"));
  }
  err << inv.Describe({{"mode", mode}}) << "\n";
  out << Num(rho) << "\n";
  return absl::OkStatus();
}

absl::Status RunSanitize(const Invocation& inv, std::ostream& out,
                         std::ostream& err) {
  const Flags& f = inv.flags();
  if (!inv.Has("in")) return absl::InvalidArgumentError("sanitize needs --in");
  const std::string mode = inv.Has("mode") ? f.mode : "independent";
  if (mode != "independent" && mode != "correlated") {
    return absl::InvalidArgumentError(absl::StrCat("unknown mode '", mode, "'"));
  }
  ASSIGN_OR_RETURN(std::optional<BinaryMarkovChain> chain, ChainFromFlags(inv));
  ASSIGN_OR_RETURN(auto explicit_noise, ExplicitNoise(inv));
  ASSIGN_OR_RETURN(BitSeries x, ReadBitSeriesFile(f.in));
  if (mode == "correlated") {
    if (!explicit_noise.has_value()) {
      return absl::InvalidArgumentError(
          "correlated mode needs --rho0/--rho1 for the noise chain");
    }
    ASSIGN_OR_RETURN(CorrelatedNoiseChain noise,
                     CorrelatedNoiseChain::Create(explicit_noise->first,
                                                  explicit_noise->second));
    err << inv.Describe({{"mode", mode}, {"seed", std::to_string(f.seed)}})
        << "\n";
    return WriteOutput(inv, out,
                       FormatBitSeriesFile(SanitizeCorrelated(x, noise, f.seed)));
  }
  std::vector<std::pair<std::string, std::string>> resolved = {
      {"mode", mode}, {"seed", std::to_string(f.seed)}};
  if (!explicit_noise.has_value() && inv.Has("eps") && !chain.has_value()) {
    ASSIGN_OR_RETURN(ChainEstimate estimate, Estimate(x));
    chain = estimate.chain;
    resolved.push_back({"q", Num(chain->q())});
    resolved.push_back({"r", Num(chain->r())});
    if (estimate.clamped) resolved.push_back({"clamped", "true"});
  }
  ASSIGN_OR_RETURN(NoiseParams noise, ResolveNoise(inv, chain));
  resolved.push_back({"rho0", Num(noise.rho0())});
  resolved.push_back({"rho1", Num(noise.rho1())});
  err << inv.Describe(resolved) << "\n";
  return WriteOutput(inv, out,
                     FormatBitSeriesFile(SanitizeIndependent(x, noise, f.seed)));
}

absl::Status RunAudit(const Invocation& inv, std::ostream& out,
                      std::ostream& err) {
  ASSIGN_OR_RETURN(BinaryMarkovChain chain, RequireChain(inv));
  ASSIGN_OR_RETURN(auto explicit_noise, ExplicitNoise(inv));
  if (!explicit_noise.has_value()) {
    return absl::InvalidArgumentError("audit needs --rho0 and --rho1");
  }
  ASSIGN_OR_RETURN(NoiseParams noise,
                   NoiseParams::Create(explicit_noise->first,
                                       explicit_noise->second));
  ASSIGN_OR_RETURN(LrBounds bounds, LrBound(chain, noise));
  err << inv.Describe({}) << "\n";
  out << "log_bound0 " << Num(bounds.log_bound0) << "\n"
      << "log_bound1 " << Num(bounds.log_bound1) << "\n"
      << "bound0 " << Num(std::exp(bounds.log_bound0)) << "\n"
      << "bound1 " << Num(std::exp(bounds.log_bound1)) << "\n"
      << "epsilon " << Num(bounds.LogMax()) << "\n";
  if (inv.Has("n")) {
    ASSIGN_OR_RETURN(ArgmaxResult argmax, ArgmaxIndex(chain, noise, inv.flags().n));
    out << "argmax_index " << argmax.i_star << "\n"
        << "argmax_lr " << Num(argmax.max_lr) << "\n";
  }
  return absl::OkStatus();
}

absl::Status RunAttack(const Invocation& inv, std::ostream& out,
                       std::ostream& err) {
  const Flags& f = inv.flags();
  if (!inv.Has("in")) return absl::InvalidArgumentError("attack needs --in");
  const std::string mode = inv.Has("mode") ? f.mode : "viterbi";
  ASSIGN_OR_RETURN(BinaryMarkovChain chain, RequireChain(inv));
  ASSIGN_OR_RETURN(NoiseParams noise, ResolveNoise(inv, chain));
  ASSIGN_OR_RETURN(BitSeries z, ReadBitSeriesFile(f.in));
  BitSeries guess;
  if (mode == "viterbi") {
    ASSIGN_OR_RETURN(guess, AttackViterbi(chain, noise, z));
  } else if (mode == "correlation_aware") {
    ASSIGN_OR_RETURN(guess, AttackCorrelationAwareAll(chain, noise, z));
  } else if (mode == "single_bit") {
    guess = z;
  } else {
    return absl::InvalidArgumentError(absl::StrCat("unknown mode '", mode, "'"));
  }
  err << inv.Describe({{"mode", mode},
                       {"rho0", Num(noise.rho0())},
                       {"rho1", Num(noise.rho1())}})
      << "\n";
  return WriteOutput(inv, out, FormatBitSeriesFile(guess));
}

absl::StatusOr<std::string> PrepareOutDir(const Invocation& inv) {
  if (!inv.Has("out-dir")) {
    return absl::InvalidArgumentError("experiment needs --out-dir");
  }
  std::error_code ec;
  std::filesystem::create_directories(inv.flags().out_dir, ec);
  if (ec) {
    return absl::UnavailableError(
        absl::StrCat("cannot create ", inv.flags().out_dir, ": ", ec.message()));
  }
  return inv.flags().out_dir;
}

std::string JoinPath(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

absl::Status RunExperiment(const Invocation& inv, std::ostream& out,
                           std::ostream& err) {
  const Flags& f = inv.flags();
  ASSIGN_OR_RETURN(std::string dir, PrepareOutDir(inv));
  std::vector<std::pair<std::string, std::string>> written;
  if (f.figure == "fig1") {
    double q = 0.2, r = 0.35;
    ASSIGN_OR_RETURN(std::optional<BinaryMarkovChain> given, ChainFromFlags(inv));
    if (given.has_value()) {
      q = given->q();
      r = given->r();
    }
    ASSIGN_OR_RETURN(BinaryMarkovChain chain, BinaryMarkovChain::Create(q, r));
    const std::vector<double> eps_list =
        inv.Has("eps") ? std::vector<double>{f.eps} : std::vector<double>{0.5, 2.0};
    const std::size_t resolution = inv.Has("n") ? f.n : 100;
    err << inv.Describe({{"q", Num(q)}, {"r", Num(r)},
                         {"resolution", std::to_string(resolution)}})
        << "\n";
    for (double eps : eps_list) {
      ASSIGN_OR_RETURN(ResultTable region, FeasibleRegion(chain, eps, resolution));
      const std::string path = JoinPath(dir, absl::StrCat("fig1_region_eps", Num(eps), ".csv"));
      RETURN_IF_ERROR(WriteFileAtomically(path, region.ToCsv()));
      written.push_back({path, ""});
    }
  } else if (f.figure == "fig2") {
    DpInsufficiencyConfig config;
    if (inv.Has("eps")) config.epsilon = f.eps;
    if (inv.Has("theta")) config.thetas = {f.theta};
    if (inv.Has("n")) {
      config.n = f.n;
      config.target = (f.n + 1) / 2;
    }
    if (inv.Has("replicates")) config.sanitizations = f.replicates;
    config.seed = f.seed;
    err << inv.Describe({{"eps", Num(config.epsilon)},
                         {"n", std::to_string(config.n)},
                         {"target", std::to_string(config.target)},
                         {"databases", std::to_string(config.databases)},
                         {"sanitizations", std::to_string(config.sanitizations)},
                         {"seed", std::to_string(config.seed)}})
        << "\n";
    ASSIGN_OR_RETURN(DpInsufficiencyResult result, RunDpInsufficiency(config));
    const std::string success = JoinPath(dir, "fig2_success.csv");
    const std::string charged = JoinPath(dir, "fig2_charged_eps.csv");
    RETURN_IF_ERROR(WriteFileAtomically(success, result.SuccessTable().ToCsv()));
    RETURN_IF_ERROR(WriteFileAtomically(charged, result.ChargedTable().ToCsv()));
    written = {{success, ""}, {charged, ""}};
  } else if (f.figure == "fig3") {
    NoisePrivacyConfig config;
    if (inv.Has("theta")) config.theta = f.theta;
    if (inv.Has("n")) config.n = f.n;
    if (inv.Has("eps")) config.epsilons = {f.eps};
    err << inv.Describe({{"theta", Num(config.theta)},
                         {"n", std::to_string(config.n)}})
        << "\n";
    ASSIGN_OR_RETURN(std::vector<NoisePrivacyRow> rows,
                     RunNoisePrivacyComparison(config));
    const std::string path = JoinPath(dir, "fig3_noise_privacy.csv");
    RETURN_IF_ERROR(WriteFileAtomically(path, NoisePrivacyTable(rows).ToCsv()));
    written = {{path, ""}};
  } else if (f.figure == "fig4") {
    ReconstructionConfig config;
    ASSIGN_OR_RETURN(std::optional<BinaryMarkovChain> given, ChainFromFlags(inv));
    if (given.has_value()) {
      config.q = given->q();
      config.r = given->r();
    }
    if (inv.Has("n")) config.n = f.n;
    if (inv.Has("eps")) config.epsilons = {f.eps};
    if (inv.Has("replicates")) config.sanitizations = f.replicates;
    config.seed = f.seed;
    if (inv.Has("in")) {
      ASSIGN_OR_RETURN(std::vector<double> series, ReadRealSeriesFile(f.in));
      ASSIGN_OR_RETURN(config.data, Binarize(series));
    }
    ASSIGN_OR_RETURN(ReconstructionResult result, RunReconstructionVsBound(config));
    std::vector<std::pair<std::string, std::string>> resolved = {
        {"q", Num(result.chain.q())}, {"r", Num(result.chain.r())},
        {"n", std::to_string(config.data ? config.data->size() : config.n)},
        {"seed", std::to_string(config.seed)}};
    if (result.estimate_clamped) resolved.push_back({"clamped", "true"});
    err << inv.Describe(resolved) << "\n";
    ResultTable table = result.Table();
    if (inv.Has("lstm")) {
      ASSIGN_OR_RETURN(std::string lstm, ReadFile(f.lstm));
      RETURN_IF_ERROR(MergeLstmColumn(table, lstm));
    }
    const std::string path = JoinPath(dir, "fig4_reconstruction.csv");
    RETURN_IF_ERROR(WriteFileAtomically(path, table.ToCsv()));
    written = {{path, ""}};
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown experiment '", f.figure,
                     "'; expected fig1, fig2, fig3 or fig4"));
  }
  for (const auto& [path, unused] : written) out << path << "\n";
  return absl::OkStatus();
}

absl::Status RunRegion(const Invocation& inv, std::ostream& out,
                       std::ostream& err) {
  if (!inv.Has("eps")) return absl::InvalidArgumentError("region needs --eps");
  ASSIGN_OR_RETURN(BinaryMarkovChain chain, RequireChain(inv));
  const std::size_t resolution = inv.Has("n") ? inv.flags().n : 100;
  err << inv.Describe({{"resolution", std::to_string(resolution)}}) << "\n";
  ASSIGN_OR_RETURN(ResultTable table,
                   FeasibleRegion(chain, inv.flags().eps, resolution));
  return WriteOutput(inv, out, table.ToCsv());
}

bool IsUsageError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kInvalidArgument ||
         status.code() == absl::StatusCode::kOutOfRange;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Bayesian differential privacy for binary Markov chains", "bdp"};
  app.require_subcommand(1);
  Flags flags;

  auto add_chain = [&](CLI::App* sub) {
    sub->add_option("--q", flags.q, "0 -> 1 transition probability");
    sub->add_option("--r", flags.r, "1 -> 0 transition probability");
    sub->add_option("--theta", flags.theta, "symmetric transition probability");
  };
  auto add_noise = [&](CLI::App* sub) {
    sub->add_option("--rho0", flags.rho0, "flip probability of a 0");
    sub->add_option("--rho1", flags.rho1, "flip probability of a 1");
  };

  CLI::App* calibrate = app.add_subcommand("calibrate", "print the noise level for a budget");
  add_chain(calibrate);
  calibrate->add_option("--eps", flags.eps, "privacy budget");
  calibrate->add_option("--n", flags.n, "chain length (zhao6 mode)");
  calibrate->add_option("--mode", flags.mode,
                        "exact | closed_form | dp | zhao3 | zhao3_substituted | zhao6");

  CLI::App* sanitize = app.add_subcommand("sanitize", "add noise to a bit series");
  add_chain(sanitize);
  add_noise(sanitize);
  sanitize->add_option("--eps", flags.eps, "privacy budget");
  sanitize->add_option("--in", flags.in, "input bit series");
  sanitize->add_option("--out", flags.out, "output bit series (default stdout)");
  sanitize->add_option("--seed", flags.seed, "random seed");
  sanitize->add_option("--mode", flags.mode, "independent | correlated");

  CLI::App* audit = app.add_subcommand("audit", "print the likelihood-ratio bounds");
  add_chain(audit);
  add_noise(audit);
  audit->add_option("--n", flags.n, "chain length for the argmax position");

  CLI::App* attack = app.add_subcommand("attack", "reconstruct a sanitized series");
  add_chain(attack);
  add_noise(attack);
  attack->add_option("--eps", flags.eps, "privacy budget used to sanitize");
  attack->add_option("--in", flags.in, "sanitized bit series");
  attack->add_option("--out", flags.out, "reconstruction (default stdout)");
  attack->add_option("--mode", flags.mode,
                     "viterbi | correlation_aware | single_bit");

  CLI::App* experiment = app.add_subcommand("experiment", "write figure data as CSV");
  experiment->add_option("figure", flags.figure, "fig1 | fig2 | fig3 | fig4")->required();
  add_chain(experiment);
  experiment->add_option("--eps", flags.eps, "single budget instead of the default grid");
  experiment->add_option("--n", flags.n, "chain length (grid resolution for fig1)");
  experiment->add_option("--seed", flags.seed, "random seed");
  experiment->add_option("--replicates", flags.replicates,
                         "sanitizations per database (fig2) or per budget (fig4)");
  experiment->add_option("--in", flags.in, "real-valued series for fig4");
  experiment->add_option("--lstm", flags.lstm, "eps,lstm_accuracy CSV to merge (fig4)");
  experiment->add_option("--out-dir", flags.out_dir, "output directory");

  CLI::App* region = app.add_subcommand("region", "feasible (rho0, rho1) grid");
  add_chain(region);
  region->add_option("--eps", flags.eps, "privacy budget");
  region->add_option("--n", flags.n, "grid resolution per axis (default 100)");
  region->add_option("--out", flags.out, "output CSV (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  Invocation inv(chosen, flags);
  absl::Status status;
  if (chosen == calibrate) {
    status = RunCalibrate(inv, out, err);
  } else if (chosen == sanitize) {
    status = RunSanitize(inv, out, err);
  } else if (chosen == audit) {
    status = RunAudit(inv, out, err);
  } else if (chosen == attack) {
    status = RunAttack(inv, out, err);
  } else if (chosen == experiment) {
    status = RunExperiment(inv, out, err);
  } else {
    status = RunRegion(inv, out, err);
  }
  if (status.ok()) return kExitOk;
  err << "error: " << status.message() << "\n";
  return IsUsageError(status) ? kExitUsageError : kExitRuntimeError;
}

}  // namespace bdp
