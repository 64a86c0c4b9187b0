#pragma once

#include <cstdint>
#include <random>

namespace qcbench {

/// SplitMix64 finalizer; used to derive independent seeds from a master seed.
uint64_t splitmix64(uint64_t x);

/// Seed for the k-th stream of a master seed. Streams for distinct k are
/// statistically independent, and the mapping is pure: the same
/// (master, index) pair always yields the same seed.
uint64_t split_seed(uint64_t master, uint64_t index);

/// Deterministic random stream. The underlying engine is mt19937_64 (fully
/// specified by the standard) and every distribution below is hand-mapped
/// from raw 64-bit draws, so identical seeds give identical streams on any
/// platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  /// Standard normal via Box-Muller; caches the spare deviate.
  double normal();

  /// Uniform integer in [0, n). Requires n >= 1.
  int uniform_int(int n);

  bool bernoulli(double p) { return p > 0.0 && uniform() < p; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qcbench
