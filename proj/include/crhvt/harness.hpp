#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "crhvt/environment.hpp"
#include "crhvt/policies.hpp"
#include "crhvt/schedule.hpp"

#include "json.hpp"

namespace crhvt {

using Json = nlohmann::ordered_json;

// How the learner is told about the corruption level and the noise moments;
// the unknown modes substitute configured upper bounds into the schedule.
enum class ParamMode { kKnown, kUnknownC, kUnknownNu, kUnknownBoth };

struct ExperimentConfig {
  std::vector<std::string> algos = {"crhvt"};
  long T = 1000;
  int d = 10;
  int K = 20;
  NoiseModel noise = NoiseModel::student_t(3);
  double corruption_C = 0.0;
  ParamMode param_mode = ParamMode::kKnown;
  double C_bar = 0.0;      // used by kUnknownC / kUnknownBoth
  double nu_bound = 0.0;   // used by kUnknownNu / kUnknownBoth; 0 = noise.nu
  std::vector<std::uint64_t> seeds = {1};
  // Schedule overrides; unset fields fall back to the default choices
  // (alpha = 8, lambda = d, sigma_min = 1/sqrt(T), delta = 1/(8T)).
  std::optional<double> alpha, lambda, sigma_min, delta;
  KappaVariant kappa_variant = KappaVariant::kAlgorithmListing;
  std::string output_dir = "out";
  bool plot = false;

  static ExperimentConfig from_json(const Json& j);
  Json to_json() const;
  void validate() const;

  // Assembled agent parameters for one of this config's algorithms.
  ScheduleParams schedule_params() const;
  double oful_noise_scale() const;
};

// One emitted row of experiment output.
struct RoundRecord {
  long t = 0;
  double instant_regret = 0.0;
  double cum_regret = 0.0;
  long long per_round_time_ns = 0;
  double sigma_t = 0.0;
  double w_t = 0.0;
  double tau_t = 0.0;
  double beta_t = 0.0;
  int active_sigma_branch = 0;
  double c_t_applied = 0.0;
};

struct InvariantReport {
  bool has_w_checks = false;  // only the OMD agents maintain w_t
  double sum_w_sq = 0.0;
  double two_kappa = 0.0;
  bool sum_w_sq_ok = true;
  double max_alpha_w_sq = 0.0;
  bool alpha_w_sq_ok = true;
  double ledger = 0.0;
  double budget = 0.0;
  bool budget_ok = true;
  bool regret_monotone = true;

  bool all_ok() const {
    return sum_w_sq_ok && alpha_w_sq_ok && budget_ok && regret_monotone;
  }
};

struct RunResult {
  std::string algo;
  std::uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
  bool failed = false;
  long failed_round = 0;
  std::string error;
  InvariantReport invariants;
};

RunResult run_single(const ExperimentConfig& cfg, const std::string& algo, std::uint64_t seed);

struct AlgoAggregate {
  std::string algo;
  std::vector<std::uint64_t> seeds;  // successful seeds, in config order
  std::vector<double> mean_cum_regret;
  std::vector<double> std_cum_regret;
  std::vector<double> mean_round_time_ns;
  std::vector<double> std_round_time_ns;
  std::vector<double> final_regret_per_seed;
  std::vector<InvariantReport> invariants;  // aligned with seeds
  std::vector<std::pair<std::uint64_t, std::string>> failures;  // seed -> error

  bool invariants_ok() const;
};

struct SuiteSummary {
  ExperimentConfig config;
  std::vector<AlgoAggregate> algos;
  std::vector<RunResult> runs;  // every run, in (algo, seed) config order

  bool all_ok() const;
  Json to_json() const;  // the summary.json payload
};

// Aggregation step of run_suite, split out so failed runs can be fed in
// directly: failures are reported per algo, successful seeds still aggregate.
SuiteSummary summarize_runs(const ExperimentConfig& cfg, std::vector<RunResult> runs);

// Runs every (algo, seed) pair; seeds may execute concurrently (BENCH_THREADS
// caps the worker count) and results are merged in config order.
SuiteSummary run_suite(const ExperimentConfig& cfg);

// Writes per-seed CSVs, summary.json and (optionally) regret.svg/runtime.svg.
void emit_outputs(const SuiteSummary& summary, const std::filesystem::path& out_dir, bool plot);

// Probe used to fail fast before any run starts.
void ensure_writable_dir(const std::filesystem::path& dir);

std::string csv_header();
std::string csv_row(const RoundRecord& rec);

}  // namespace crhvt
