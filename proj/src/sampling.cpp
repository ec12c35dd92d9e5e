#include "qcap/sampling.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qcap {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct Tally {
  long degradable = 0;
  long anti_degradable = 0;
  long both = 0;
  long neither = 0;
  long inconclusive = 0;

  void add(const Tally& o) {
    degradable += o.degradable;
    anti_degradable += o.anti_degradable;
    both += o.both;
    neither += o.neither;
    inconclusive += o.inconclusive;
  }
};

void count(Tally& tally, Verdict v) {
  switch (v) {
    case Verdict::Degradable: ++tally.degradable; break;
    case Verdict::AntiDegradable: ++tally.anti_degradable; break;
    case Verdict::Both: ++tally.both; break;
    case Verdict::Neither: ++tally.neither; break;
    case Verdict::Inconclusive: ++tally.inconclusive; break;
  }
}

double wilson_halfwidth(double p, double n) {
  constexpr double z = 1.959963984540054;  // 95%
  const double z2 = z * z;
  return z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) /
         (1.0 + z2 / n);
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t stream =
      splitmix64(splitmix64(seed) ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return std::mt19937_64(stream);
}

QuantumChannel haar_random_channel(int d, int d_env, std::mt19937_64& rng) {
  if (d < 2 || d_env < 1) {
    throw std::invalid_argument("haar_random_channel: need d >= 2, d_E >= 1");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(d) * d_env;
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(rows, d);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (int j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, d);
  const CMatrix r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
  // Fix the gauge so that R's diagonal is real positive; this makes the
  // map Ginibre -> isometry well-defined and the output Haar distributed.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return from_isometry(q, d_env);
}

SampleStats degradable_fraction(int d, int d_env, long n, std::uint64_t seed,
                                int threads) {
  if (n < 1) throw std::invalid_argument("degradable_fraction: n >= 1");
  if (threads < 1) threads = 1;
  threads = static_cast<int>(
      std::min<long>(threads, std::max<long>(1, n)));

  const auto run_range = [&](long begin, long end, Tally& tally) {
    for (long i = begin; i < end; ++i) {
      auto rng = trial_rng(seed, static_cast<std::uint64_t>(i));
      const QuantumChannel t = haar_random_channel(d, d_env, rng);
      count(tally, classify(t).verdict);
    }
  };

  Tally total;
  if (threads == 1) {
    run_range(0, n, total);
  } else {
    std::vector<Tally> parts(threads);
    std::vector<std::thread> pool;
    const long chunk = (n + threads - 1) / threads;
    for (int k = 0; k < threads; ++k) {
      const long begin = k * chunk;
      const long end = std::min<long>(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end, std::ref(parts[k]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) total.add(part);
  }

  SampleStats stats;
  stats.d = d;
  stats.d_env = d_env;
  stats.n = n;
  stats.seed = seed;
  const double dn = static_cast<double>(n);
  stats.degradable = total.degradable / dn;
  stats.anti_degradable = total.anti_degradable / dn;
  stats.both = total.both / dn;
  stats.neither = total.neither / dn;
  stats.inconclusive = total.inconclusive / dn;
  stats.wilson_halfwidth = wilson_halfwidth(stats.degradable, dn);
  return stats;
}

}  // namespace qcap
