#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "crhvt/linalg.hpp"
#include "crhvt/rng.hpp"

namespace crhvt {

// Reward noise generator together with the (epsilon, nu) moment certificate
// reported to the learner each round.
struct NoiseModel {
  enum class Kind { kStudentT, kCenteredPareto, kGaussian, kNone };

  Kind kind = Kind::kNone;
  double df = 3.0;      // student t degrees of freedom (integer)
  double shape = 1.5;   // pareto shape
  double x_min = 1.0;   // pareto minimum
  double sd = 1.0;      // gaussian
  double epsilon = 1.0;
  double nu = 1.0;
  // Optional per-round moment-bound sequence reported to the learner; the
  // last entry repeats past its end. Empty means the constant `nu`.
  std::vector<double> nu_sequence;
  bool finite_variance = true;

  double nu_at(long round) const {
    if (nu_sequence.empty()) return nu;
    const std::size_t i = std::min<std::size_t>(round - 1, nu_sequence.size() - 1);
    return nu_sequence[i];
  }

  // df > 2 gives finite variance df/(df-2); declared as (eps=1, nu=sqrt(var)).
  static NoiseModel student_t(int df = 3);
  // Pareto(shape, x_min) shifted by its mean shape*x_min/(shape-1) so the
  // noise is zero-mean. Declared bound: eps = 0.4 and
  // nu = (shape x_min^{1.4} / (shape - 1.4))^{1/1.4}, the raw-variable moment.
  static NoiseModel centered_pareto(double shape = 1.5, double x_min = 1.0);
  static NoiseModel gaussian(double sd);
  static NoiseModel none();

  double sample(Prng& rng) const;
};

// theta-flipping adversary: replaces <x, theta*> by its negation
// (c = -2 <x, theta*>) while the remaining budget covers |c|.
struct AdversaryState {
  enum class Kind { kNone, kThetaFlip };

  Kind kind = Kind::kNone;
  double budget = 0.0;     // C
  double remaining = 0.0;
  double ledger = 0.0;     // sum of applied |c_t|

  static AdversaryState none();
  static AdversaryState theta_flip(double budget);
};

struct CorruptionResult {
  double r = 0.0;  // observed (possibly corrupted) reward
  double c = 0.0;  // applied corruption
};

CorruptionResult apply_corruption(AdversaryState& adv, const Vec& x, const Vec& theta_star,
                                  double r_prime);

// Uniform unit vector (normalized standard Gaussian).
Vec sample_unit_vector(Prng& rng, int d);

// Problem instance of the synthetic experiments: unit-norm theta*, K fresh
// unit-vector arms per round, L = S = 1.
struct Instance {
  Vec theta_star;
  int d = 0;
  int K = 0;
  std::uint64_t seed = 0;
};

Instance sample_instance(std::uint64_t seed, int d, int K);

struct EnvConfig {
  int d = 10;
  int K = 20;
  NoiseModel noise;
  double corruption_C = 0.0;  // 0 disables the adversary
};

// Owns the instance, the per-purpose RNG streams and the adversary ledger.
// Instances with distinct seeds have disjoint streams.
class Environment {
 public:
  Environment(const EnvConfig& cfg, std::uint64_t seed);

  const Vec& theta_star() const { return instance_.theta_star; }
  const EnvConfig& config() const { return cfg_; }
  const AdversaryState& adversary() const { return adversary_; }

  std::vector<Vec> sample_decision_set();

  struct Feedback {
    double reward = 0.0;      // observed reward r = <x, theta*> + eta + c
    double corruption = 0.0;  // applied c
    double nu_t = 0.0;        // per-round moment bound reported to the learner
  };
  Feedback feedback(const Vec& x);

 private:
  EnvConfig cfg_;
  Instance instance_;
  Prng set_stream_;
  Prng noise_stream_;
  AdversaryState adversary_;
  long round_ = 0;
};

// max_k <x_k, theta*> - <x_chosen, theta*>, on noise-free uncorrupted means.
double regret_increment(const std::vector<Vec>& decision_set, int chosen_index,
                        const Vec& theta_star);

}  // namespace crhvt
