#pragma once

#include <memory>
#include <string>
#include <vector>

#include "crhvt/estimator.hpp"
#include "crhvt/linalg.hpp"
#include "crhvt/schedule.hpp"

namespace crhvt {

// Per-round internals surfaced to the experiment harness. Fields not
// meaningful for a given policy stay at zero.
struct PolicyDiagnostics {
  double sigma_t = 0.0;
  double w_t = 0.0;
  double tau_t = 0.0;
  double beta = 0.0;        // exploration radius after the round's update
  int sigma_branch = 0;     // SigmaBranch as int, 0 when not applicable
  int solver_iterations = 0;
  bool solver_converged = true;
};

// Shared UCB rule: argmax of <x, theta> + beta ||x||_{V^-1}, ties broken by
// the lowest index. Throws on an empty decision set.
int ucb_select(const std::vector<Vec>& decision_set, const Vec& theta, const SpdState& V,
               double beta);

// Common contract: select is deterministic given internal state and the
// decision set (ties break to the lowest index); observe advances one round.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual const std::string& name() const = 0;
  virtual int select(const std::vector<Vec>& decision_set) const = 0;
  virtual void observe(const Vec& x, double r, double nu_t) = 0;
  virtual const PolicyDiagnostics& diagnostics() const = 0;
};

// The OMD/Huber agent. "hvtucb" is the same policy with the corruption budget
// pinned to zero, not a separate code path.
class CrHvtPolicy : public Policy {
 public:
  CrHvtPolicy(std::string name, const ScheduleParams& params);

  const std::string& name() const override { return name_; }
  int select(const std::vector<Vec>& decision_set) const override;
  void observe(const Vec& x, double r, double nu_t) override;
  const PolicyDiagnostics& diagnostics() const override { return diag_; }

  const EstimatorState& state() const { return state_; }
  const ScheduleParams& params() const { return params_; }

 private:
  std::string name_;
  ScheduleParams params_;
  EstimatorState state_;
  PolicyDiagnostics diag_;
};

// Ridge-regression UCB control (non-robust): V = lambda I + sum x x^T,
// theta = V^-1 sum r x, radius R sqrt(d log((1 + t L^2/lambda)/delta)) + sqrt(lambda) S.
class OfulPolicy : public Policy {
 public:
  OfulPolicy(const ScheduleParams& params, double noise_scale);

  const std::string& name() const override { return name_; }
  int select(const std::vector<Vec>& decision_set) const override;
  void observe(const Vec& x, double r, double nu_t) override;
  const PolicyDiagnostics& diagnostics() const override { return diag_; }

  const Vec& theta_hat() const { return theta_hat_; }
  double radius(long t) const;

 private:
  std::string name_ = "oful";
  ScheduleParams params_;
  double noise_scale_;
  long round_ = 0;
  SpdState V_;
  Vec reward_sum_;  // sum r x
  Vec theta_hat_;
  PolicyDiagnostics diag_;
};

// One past observation of the full-resolve baseline.
struct PseudoHuberObservation {
  Vec x;
  double r = 0.0;
  double sigma = 1.0;
  double tau = 1.0;
};

struct PseudoHuberSolveResult {
  Vec theta;
  int iterations = 0;
  bool converged = true;
  double objective = 0.0;
};

// Minimizes sum_s pseudo_huber_{tau_s}((r_s - <x_s, theta>)/sigma_s)
// + (lambda/2)||theta||^2 over the Euclidean S-ball by projected gradient
// descent with Armijo backtracking. Stops at projected-gradient norm
// <= grad_tol or after max_iterations (best iterate returned, flagged).
PseudoHuberSolveResult solve_pseudo_huber_regression(
    const std::vector<PseudoHuberObservation>& history, double lambda, double S,
    const Vec& warm_start, double grad_tol, int max_iterations);

// Full-history re-solve baseline. Per-round cost grows linearly in t by
// construction; that growth is what the runtime comparison measures.
class GAdaOfulPolicy : public Policy {
 public:
  explicit GAdaOfulPolicy(const ScheduleParams& params);

  const std::string& name() const override { return name_; }
  int select(const std::vector<Vec>& decision_set) const override;
  void observe(const Vec& x, double r, double nu_t) override;
  const PolicyDiagnostics& diagnostics() const override { return diag_; }

  const std::vector<PseudoHuberObservation>& history() const { return history_; }
  const Vec& theta_hat() const { return theta_hat_; }

 private:
  std::string name_ = "gadaoful";
  ScheduleParams params_;
  double kappa_ = 0.0;
  double tau0_ = 0.0;
  long round_ = 0;
  SpdState V_;
  std::vector<PseudoHuberObservation> history_;
  Vec theta_hat_;
  int max_iterations_ = 0;
  PolicyDiagnostics diag_;
};

// Accepted names: "crhvt", "hvtucb", "oful", "gadaoful". For "hvtucb" the
// corruption budget in `params` is overridden to zero; `oful_noise_scale` is
// the R parameter of the control.
std::unique_ptr<Policy> make_policy(const std::string& name, const ScheduleParams& params,
                                    double oful_noise_scale = 1.0);

}  // namespace crhvt
