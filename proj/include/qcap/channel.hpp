// Quantum channel representations and conversions: Kraus form, conjugate
// channel, Jamiolkowski operator, transfer matrix, composition, convex
// mixtures, and the two-parameter qubit normal form.
//
// Conventions fixed once for the whole project:
//   * vec() is row-major: vec(A)[i * cols + j] = A(i, j).
//   * The transfer matrix acts as vec(T(rho)) = tau_gamma * vec(rho),
//     i.e. tau_gamma = sum_i kron(A_i, conj(A_i)).
//   * The Jamiolkowski operator tau = (T (x) id)(omega) with the
//     UNNORMALIZED omega = sum_ij |ii><jj|, so tr tau = d_in. Row index
//     of tau is (out, in)-major: (m, i) -> m * d_in + i.
//   * The Gamma involution <ij|tau_gamma|kl> = <ik|tau|jl> is defined with
//     independent row/column dimensions so it also covers rectangular
//     transfer matrices (d_E != d).
#pragma once

#include <utility>
#include <vector>

#include "qcap/matrix_ops.hpp"

namespace qcap {

struct NormalFormParams {
  double alpha = 0.0;  // radians
  double beta = 0.0;   // radians
};

class QuantumChannel {
 public:
  // Validates shape consistency, finiteness, the Kraus-count bound
  // 1 <= d_E <= d_in * d_out and trace preservation within 1e-9.
  explicit QuantumChannel(std::vector<CMatrix> kraus);

  // Skips the trace-preservation check (dimension/finiteness checks only).
  // Used by the JSON loader so that validate() can report TP violations.
  static QuantumChannel unchecked(std::vector<CMatrix> kraus);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  int env_dim() const { return static_cast<int>(kraus_.size()); }
  const std::vector<CMatrix>& kraus() const { return kraus_; }

  // ||sum_i A_i^dagger A_i - 1||_F
  double tp_residual() const;

 private:
  QuantumChannel() = default;
  std::vector<CMatrix> kraus_;
  int d_in_ = 0;
  int d_out_ = 0;
};

struct JamiolkowskiOperator {
  int d_out = 0;
  int d_in = 0;
  CMatrix matrix;  // (d_out * d_in) x (d_out * d_in)
};

struct TransferMatrix {
  int d_out = 0;
  int d_in = 0;
  CMatrix matrix;  // (d_out^2) x (d_in^2)
};

struct ChannelReport {
  double cp_margin = 0.0;    // min eigenvalue of tau
  double tp_residual = 0.0;  // ||sum A^dag A - 1||_F
};

// T(rho) = sum_i A_i rho A_i^dagger.
CMatrix apply(const QuantumChannel& t, const CMatrix& rho);

// Conjugate (complementary) channel, (A~_i)_{kl} = (A_k)_{il}. Maps the
// input to the environment; d_out becomes d_E and the Kraus count becomes
// d_out of the source. Applying it twice returns the original Kraus list.
QuantumChannel conjugate(const QuantumChannel& t);

// tau = sum_i vec(A_i) vec(A_i)^dagger = (T (x) id)(omega).
JamiolkowskiOperator jamiolkowski(const QuantumChannel& t);

// tau_gamma = sum_i kron(A_i, conj(A_i)).
TransferMatrix transfer_matrix(const QuantumChannel& t);

// The Gamma involution in both directions; an exact entry permutation.
TransferMatrix involution_gamma(const JamiolkowskiOperator& tau);
JamiolkowskiOperator involution_gamma(const TransferMatrix& tg);

// Composition T1 after T2 with Kraus list {A_i B_j}; requires
// d_out(T2) == d_in(T1). Transfer matrices multiply.
QuantumChannel compose(const QuantumChannel& t1, const QuantumChannel& t2);

// Identity channel on a d-dimensional system (single Kraus operator).
QuantumChannel identity_channel(int d);

// Two-parameter qubit normal form:
//   A1 = [[cos a, 0], [0, cos b]],  A2 = [[0, sin b], [sin a, 0]].
// a = b is dephasing, b = 0 is amplitude damping.
QuantumChannel from_normal_form(const NormalFormParams& p);

// Splits an isometry V: C^d -> C^d (x) C^{d_E} (system-major rows) into
// Kraus operators A_i = (1 (x) <i|) V. Requires V^dagger V = 1 within 1e-9.
QuantumChannel from_isometry(const CMatrix& v, int env_dim);

// Minimal environment dimension: eigenvalues of tau above 1e-9 * tr(tau).
int kraus_rank(const QuantumChannel& t);

// sum_i p_i T_i as the Kraus concatenation {sqrt(p_i) A_j^(i)}.
QuantumChannel convex_mixture(
    const std::vector<std::pair<double, QuantumChannel>>& terms);

// CP margin (min eigenvalue of tau) and TP residual, no thresholds applied.
ChannelReport validate(const QuantumChannel& t);

}  // namespace qcap
