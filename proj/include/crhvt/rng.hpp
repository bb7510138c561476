#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace crhvt {

// Counter-based 64-bit generator (splitmix64). The state is an arithmetic
// counter and every output is a finalizer of it, so streams derived from
// distinct keys never share state. Used instead of std::mt19937 +
// std::*_distribution so that reward/decision streams are bit-identical
// across platforms and standard libraries.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for one (seed, purpose) pair.
  static Prng stream(std::uint64_t seed, std::uint64_t purpose);

  std::uint64_t next_u64();

  // Uniform on [0, 1).
  double uniform01();
  // Uniform on (0, 1], safe as a log() argument.
  double uniform_open01();

  // Standard normal via Box-Muller; the sine mate is cached.
  double normal();
  std::pair<double, double> normal_pair();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stream purposes used by the environment. Fixed values are part of the
// reproducibility contract: changing them changes every stream.
enum class StreamPurpose : std::uint64_t {
  kInstance = 1,      // theta_star
  kDecisionSets = 2,  // per-round action sets
  kNoise = 3,         // reward noise
};

Prng make_stream(std::uint64_t seed, StreamPurpose purpose);

}  // namespace crhvt
