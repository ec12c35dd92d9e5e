#include "qcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcap/sampling.hpp"

namespace qcap {

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

// Golden-section maximization of f on [lo, hi] down to interval width `w`.
template <typename F>
double golden_max(F&& f, double lo, double hi, double w) {
  double m1 = hi - kGolden * (hi - lo);
  double m2 = lo + kGolden * (hi - lo);
  double f1 = f(m1);
  double f2 = f(m2);
  while (hi - lo > w) {
    if (f1 < f2) {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + kGolden * (hi - lo);
      f2 = f(m2);
    } else {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - kGolden * (hi - lo);
      f1 = f(m1);
    }
  }
  return 0.5 * (lo + hi);
}

// -log2 of a PSD matrix with eigenvalues floored away from zero; used only
// inside the ascent gradient where exact zero eigenvalues cannot occur at
// the states the line search visits.
CMatrix minus_log2(const CMatrix& rho) {
  const auto eig = herm_eigensystem(rho);
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = std::max(eig.eigenvalues(k), 1e-14);
    out += (-std::log2(lambda)) * eig.eigenvectors.col(k) *
           eig.eigenvectors.col(k).adjoint();
  }
  return out;
}

CMatrix adjoint_apply(const QuantumChannel& t, const CMatrix& sigma) {
  CMatrix out = CMatrix::Zero(t.d_in(), t.d_in());
  for (const auto& a : t.kraus()) out += a.adjoint() * sigma * a;
  return out;
}

CMatrix random_pure_state(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(d);
  for (int i = 0; i < d; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  v /= v.norm();
  return v * v.adjoint();
}

struct AscentResult {
  double value = 0.0;
  CMatrix input;
  int iterations = 0;
};

// Mixing line-search ascent of J(T, .) from rho0. Each step mixes toward
// the top eigenvector of the gradient; for degradable channels J is
// concave so the Frank-Wolfe gap bounds the remaining suboptimality.
AscentResult ascend(const QuantumChannel& t, const QuantumChannel& t_conj,
                    CMatrix rho) {
  const auto j_of = [&](const CMatrix& state) {
    return von_neumann_entropy(qcap::apply(t, state)) -
           von_neumann_entropy(qcap::apply(t_conj, state));
  };
  AscentResult best;
  best.value = j_of(rho);
  best.input = rho;
  const int max_iterations = 600;
  for (int it = 0; it < max_iterations; ++it) {
    const CMatrix grad = adjoint_apply(t, minus_log2(qcap::apply(t, rho))) -
                         adjoint_apply(t_conj, minus_log2(qcap::apply(t_conj, rho)));
    const auto eig = herm_eigensystem(0.5 * (grad + grad.adjoint()));
    const CMatrix target =
        eig.eigenvectors.col(0) * eig.eigenvectors.col(0).adjoint();
    const double gap =
        eig.eigenvalues(0) - (grad * rho).trace().real();
    const double step = golden_max(
        [&](double s) {
          const CMatrix mix = (1.0 - s) * rho + s * target;
          return j_of(mix);
        },
        0.0, 1.0, 1e-12);
    const CMatrix next = (1.0 - step) * rho + step * target;
    const double value = j_of(next);
    best.iterations = it + 1;
    const double improvement = value - best.value;
    if (value > best.value) {
      best.value = value;
      best.input = next;
      rho = next;
    }
    if (gap < 1e-10 || improvement < 1e-9) break;
  }
  return best;
}

AscentResult maximize_coherent_information(const QuantumChannel& t,
                                           std::uint64_t seed) {
  const QuantumChannel t_conj = conjugate(t);
  const int d = t.d_in();
  AscentResult best =
      ascend(t, t_conj, CMatrix::Identity(d, d) / static_cast<double>(d));
  for (std::uint64_t k = 0; k < 5; ++k) {
    auto rng = trial_rng(seed, k);
    AscentResult trial = ascend(t, t_conj, random_pure_state(d, rng));
    if (trial.value > best.value) best = trial;
  }
  return best;
}

CapacityResult exact_capacity(const QuantumChannel& t, std::uint64_t seed) {
  const DegradabilityReport report = classify(t);
  if (report.verdict == Verdict::AntiDegradable ||
      report.verdict == Verdict::Both) {
    CapacityResult r;
    r.value = 0.0;
    r.kind = CapacityKind::ZeroByAnticloning;
    r.diagnostics = "anti-degradable: no-cloning forces Q = 0";
    return r;
  }
  if (report.verdict == Verdict::Degradable) {
    return single_letter_capacity(t, seed);
  }
  std::ostringstream os;
  os << "capacity not exact: channel classified as "
     << to_string(report.verdict);
  throw std::invalid_argument(os.str());
}

}  // namespace

std::string to_string(CapacityKind k) {
  switch (k) {
    case CapacityKind::Exact: return "exact";
    case CapacityKind::ZeroByAnticloning: return "zero-by-anticloning";
    case CapacityKind::LowerBoundOnly: return "lower-bound-only";
  }
  return "lower-bound-only";
}

double coherent_information(const QuantumChannel& t, const CMatrix& rho) {
  if (rho.rows() != t.d_in() || rho.cols() != t.d_in()) {
    throw std::invalid_argument("coherent_information: dimension mismatch");
  }
  return von_neumann_entropy(qcap::apply(t, rho)) -
         von_neumann_entropy(qcap::apply(conjugate(t), rho));
}

bool zero_capacity_region(const NormalFormParams& p) {
  const auto snapped = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  const double c2a = snapped(std::cos(2.0 * p.alpha));
  const double c2b = snapped(std::cos(2.0 * p.beta));
  // Product form of the quotient test cos(2a)/cos(2b) <= 0; at
  // cos(2b) = 0 the channel
  // is anti-degradable as well as degradable, so Q = 0 stands.
  return c2a * c2b <= 0.0;
}

CapacityResult qubit_capacity(const NormalFormParams& p) {
  CapacityResult r;
  if (zero_capacity_region(p)) {
    r.value = 0.0;
    r.kind = CapacityKind::ZeroByAnticloning;
    r.diagnostics = "cos(2a) cos(2b) <= 0";
    return r;
  }
  const double ca2 = std::cos(p.alpha) * std::cos(p.alpha);
  const double sa2 = std::sin(p.alpha) * std::sin(p.alpha);
  const double sb2 = std::sin(p.beta) * std::sin(p.beta);
  const auto objective = [&](double q) {
    return binary_entropy(q * ca2 + (1.0 - q) * sb2) -
           binary_entropy(q * sa2 + (1.0 - q) * sb2);
  };
  // Coarse grid, then golden-section refinement around the best node.
  const int grid = 2000;
  int best_i = 0;
  double best_v = objective(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double v = objective(static_cast<double>(i) / grid);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  const double lo = std::max(0.0, (best_i - 1.0) / grid);
  const double hi = std::min(1.0, (best_i + 1.0) / grid);
  const double p_star = golden_max(objective, lo, hi, 1e-12);
  r.value = std::max(objective(p_star), 0.0);
  r.kind = CapacityKind::Exact;
  r.achieved_p = p_star;
  return r;
}

CapacityResult single_letter_capacity(const QuantumChannel& t,
                                      std::uint64_t seed) {
  const DegradabilityReport report = classify(t);
  if (report.verdict != Verdict::Degradable &&
      report.verdict != Verdict::Both) {
    std::ostringstream os;
    os << "single-letter formula not certified: channel classified as "
       << to_string(report.verdict);
    throw std::invalid_argument(os.str());
  }
  const AscentResult best = maximize_coherent_information(t, seed);
  CapacityResult r;
  r.value = std::max(best.value, 0.0);
  r.kind = CapacityKind::Exact;
  r.achieved_input = best.input;
  std::ostringstream os;
  os << "concave ascent, " << best.iterations << " iterations on final restart";
  r.diagnostics = os.str();
  return r;
}

CapacityResult capacity_or_bounds(const QuantumChannel& t,
                                  std::uint64_t seed) {
  const DegradabilityReport report = classify(t);
  if (report.verdict == Verdict::AntiDegradable ||
      report.verdict == Verdict::Both) {
    CapacityResult r;
    r.value = 0.0;
    r.kind = CapacityKind::ZeroByAnticloning;
    r.diagnostics = "anti-degradable: no-cloning forces Q = 0";
    return r;
  }
  if (report.verdict == Verdict::Degradable) {
    return single_letter_capacity(t, seed);
  }
  const AscentResult best = maximize_coherent_information(t, seed);
  CapacityResult r;
  r.value = std::max(best.value, 0.0);
  r.kind = CapacityKind::LowerBoundOnly;
  r.achieved_input = best.input;
  std::ostringstream os;
  os << "achievable rate only (" << to_string(report.verdict)
     << " channel); regularization may raise the true capacity";
  r.diagnostics = os.str();
  return r;
}

ConvexBound convex_upper_bound(
    const std::vector<std::pair<double, QuantumChannel>>& terms,
    std::uint64_t seed) {
  std::vector<std::pair<double, CapacityResult>> resolved;
  resolved.reserve(terms.size());
  for (const auto& [w, t] : terms) {
    resolved.emplace_back(w, exact_capacity(t, seed));
  }
  return convex_upper_bound(resolved);
}

ConvexBound convex_upper_bound(
    const std::vector<std::pair<double, CapacityResult>>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("convex_upper_bound: no terms");
  }
  double total = 0.0;
  ConvexBound bound;
  for (const auto& [w, cap] : terms) {
    if (w < -1e-12) {
      throw std::invalid_argument("convex_upper_bound: negative weight");
    }
    if (cap.kind == CapacityKind::LowerBoundOnly) {
      throw std::invalid_argument(
          "convex_upper_bound: term has no exact capacity (lower bound "
          "only); convexity applies to degradable/anti-degradable terms");
    }
    total += w;
    bound.term_values.push_back(cap.value);
    bound.value += w * cap.value;
  }
  if (std::abs(total - 1.0) > tol::trace_one) {
    std::ostringstream os;
    os << "convex_upper_bound: weights sum to " << total;
    throw std::invalid_argument(os.str());
  }
  return bound;
}

double bottleneck_bound(double q1, double q2) {
  if (q1 < 0.0 || q2 < 0.0) {
    throw std::domain_error("bottleneck_bound: capacities must be >= 0");
  }
  return std::min(q1, q2);
}

}  // namespace qcap
