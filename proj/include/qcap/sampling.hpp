// Seeded Haar-random channel generation (Ginibre + phase-fixed QR) and
// Monte-Carlo estimation of degradable/anti-degradable fractions.
// Per-trial RNG streams are split off the master seed by counter hashing,
// so serial and parallel runs produce identical statistics.
#pragma once

#include <cstdint>
#include <random>

#include "qcap/degradability.hpp"

namespace qcap {

struct SampleStats {
  int d = 0;
  int d_env = 0;
  long n = 0;
  std::uint64_t seed = 0;
  double degradable = 0.0;
  double anti_degradable = 0.0;
  double both = 0.0;
  double neither = 0.0;
  double inconclusive = 0.0;
  double wilson_halfwidth = 0.0;  // 95% interval for the degradable fraction
};

// Independent RNG stream for trial `index` of master seed `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

// Haar-random channel: (d * d_env) x d complex Ginibre matrix,
// orthonormalized by QR with the R diagonal made real positive, split into
// Kraus operators.
QuantumChannel haar_random_channel(int d, int d_env, std::mt19937_64& rng);

// Classifies n independent draws. Deterministic for fixed arguments
// regardless of `threads`.
SampleStats degradable_fraction(int d, int d_env, long n, std::uint64_t seed,
                                int threads = 1);

}  // namespace qcap
