#pragma once

#include <cstdint>

namespace crhvt {

// Whether the learner uses the per-round moment bound reported by the
// environment or a single global bound (the unknown-nu substitution).
enum class MomentMode { kPerRound, kGlobalBound };

// Two selectable denominators for the kappa constant:
// sigma_min^2 lambda alpha d (default) or 4 sigma_min^2 lambda d, kept
// configurable for A/B comparisons of the schedule.
enum class KappaVariant { kAlgorithmListing, kLemmaVariant };

// Every scalar hyperparameter of the agent and its schedules.
struct ScheduleParams {
  long T = 1;              // horizon
  int d = 1;               // ambient dimension
  double epsilon = 1.0;    // noise moment exponent, in (0, 1]
  double L = 1.0;          // action norm bound
  double S = 1.0;          // parameter norm bound
  double delta = 0.01;     // confidence level, in (0, 1/4)
  double lambda = 1.0;     // regularization
  double alpha = 8.0;      // OMD step-size parameter
  double sigma_min = 0.0;  // scale floor
  double corruption_budget = 0.0;  // C (or the upper bound C-bar)
  MomentMode moment_mode = MomentMode::kPerRound;
  double nu_global = 1.0;  // used in kGlobalBound mode
  KappaVariant kappa_variant = KappaVariant::kAlgorithmListing;

  // lambda = d, sigma_min = 1/sqrt(T), delta = 1/(8T), alpha = 8.
  static ScheduleParams defaults(long T, int d, double epsilon);

  // (1 - epsilon) / (2 (1 + epsilon)); zero when epsilon = 1.
  double power_exponent() const { return (1.0 - epsilon) / (2.0 * (1.0 + epsilon)); }

  void validate() const;  // throws std::invalid_argument
};

// d log(1 + L^2 T / (sigma_min^2 lambda alpha d)), natural log.
double compute_kappa(const ScheduleParams& p);

// sqrt(2 kappa) (log 3T)^{(1-eps)/(2(1+eps))} / (log(2T^2/delta))^{1/(1+eps)}.
double compute_tau0(const ScheduleParams& p, double kappa);

// 409 log(2T^2/delta) tau0 t^{(1-eps)/(2(1+eps))} + sqrt(lambda (2 + 4 S^2))
// for t >= 1; the additive constant alone at t = 0.
double compute_beta(long t, const ScheduleParams& p, double tau0);

}  // namespace crhvt
