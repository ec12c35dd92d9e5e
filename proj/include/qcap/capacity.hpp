// Coherent information and quantum capacity. The closed-form qubit
// capacity maximizes
//   h(p cos^2 a + (1-p) sin^2 b) - h(p sin^2 a + (1-p) sin^2 b)
// over p in [0, 1] and is exactly zero when cos(2a) cos(2b) <= 0
// (anti-degradable region). For general degradable channels the coherent
// information is concave and is maximized by mixing line searches; for
// everything else only a lower bound is reported. All values in bits.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcap/degradability.hpp"

namespace qcap {

enum class CapacityKind { Exact, ZeroByAnticloning, LowerBoundOnly };

std::string to_string(CapacityKind k);

struct CapacityResult {
  double value = 0.0;
  CapacityKind kind = CapacityKind::LowerBoundOnly;
  std::optional<double> achieved_p;       // qubit normal-form path
  std::optional<CMatrix> achieved_input;  // general path
  std::string diagnostics;
};

// J(T, rho) = S(T(rho)) - S(T~(rho)).
double coherent_information(const QuantumChannel& t, const CMatrix& rho);

// cos(2a) cos(2b) <= 0, with cosines within 1e-12 of zero snapped to zero
// so that exact boundary angles (pi/4 etc.) land in the zero region at
// double precision.
bool zero_capacity_region(const NormalFormParams& p);

// Closed-form capacity of the qubit normal form (2001-point grid plus
// golden-section refinement of the 1-D objective).
CapacityResult qubit_capacity(const NormalFormParams& p);

// Concave ascent over density matrices; requires classify(t) to certify
// degradability (throws otherwise). Deterministic for a fixed seed.
CapacityResult single_letter_capacity(const QuantumChannel& t,
                                      std::uint64_t seed = 0);

// Routes by verdict: anti-degradable (or both) -> exact 0, degradable ->
// single-letter capacity, otherwise a lower bound max(0, sup_rho J).
CapacityResult capacity_or_bounds(const QuantumChannel& t,
                                  std::uint64_t seed = 0);

struct ConvexBound {
  double value = 0.0;
  std::vector<double> term_values;  // exact capacity per term
};

// Q(sum p_i T_i) <= sum p_i Q(T_i); every term must resolve to an exact
// capacity (degradable or anti-degradable), else this refuses.
ConvexBound convex_upper_bound(
    const std::vector<std::pair<double, QuantumChannel>>& terms,
    std::uint64_t seed = 0);
ConvexBound convex_upper_bound(
    const std::vector<std::pair<double, CapacityResult>>& terms);

// Q(T1 o T2) <= min(Q(T1), Q(T2)).
double bottleneck_bound(double q1, double q2);

}  // namespace qcap
