#pragma once

#include "crhvt/linalg.hpp"
#include "crhvt/schedule.hpp"

namespace crhvt {

// Candidate terms of the per-round scale, in the order the max is taken.
// Ties report the earliest branch.
enum class SigmaBranch : int {
  kMomentBound = 1,  // nu_t
  kScaleFloor = 2,   // sigma_min
  kConfidence = 3,   // sqrt(2 beta / (tau0 sqrt(alpha) t^pw)) ||x||_{Vinv}
  kCorruption = 4,   // sqrt(C) kappa^{-1/4} ||x||_{Vinv}^{1/2}
};

struct RoundDiagnostics {
  double sigma = 0.0;
  double w = 0.0;
  double tau = 0.0;
  SigmaBranch branch = SigmaBranch::kMomentBound;
};

// Threshold returned when the action vector is zero; the round's gradient is
// zero regardless of the threshold, so this value is never consumed.
inline constexpr double kUnusedTauSentinel = 1e300;

// Round-indexed belief of the agent: after `round` completed rounds it holds
// theta_hat_{round+1}, V_round and beta_round.
struct EstimatorState {
  explicit EstimatorState(const ScheduleParams& p);

  long round = 0;
  Vec theta_hat;
  SpdState V;
  double beta_prev = 0.0;
  double kappa = 0.0;
  double tau0 = 0.0;
  RoundDiagnostics last;
};

// Four-way max of the scale candidates for round t (>= 1). In kGlobalBound
// mode the reported nu_t is ignored in favour of the configured global bound.
double compute_sigma(const EstimatorState& s, const ScheduleParams& p, long t, const Vec& x,
                     double nu_t, SigmaBranch* active = nullptr);

// (1/sqrt(alpha)) ||x / sigma||_{V^-1}; zero iff x = 0.
double compute_w(const EstimatorState& s, const ScheduleParams& p, const Vec& x, double sigma_t);

// tau0 sqrt(1 + w^2)/w * t^{(1-eps)/(2(1+eps))}; sentinel for w = 0.
double compute_tau(const ScheduleParams& p, double tau0, long t, double w_t);

// One mirror-descent round: V_t <- V_{t-1} + x x^T / (alpha sigma^2), then the
// preconditioned gradient step and the projection back onto the S-ball.
// Advances `round` and refreshes beta_prev.
void omd_step(EstimatorState& s, const ScheduleParams& p, const Vec& x, double r, double sigma_t,
              double tau_t);

}  // namespace crhvt
