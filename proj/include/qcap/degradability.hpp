// Degradability and anti-degradability tests.
//
// Two independent criteria are provided:
//   * the transfer-matrix construction tau_Phi = [tau~_gamma
//     (tau_gamma)^-1]_gamma, whose positivity decides degradability, and
//   * the twisted-diagonal H-matrix criterion for channels with a qubit
//     environment, H_{kl} = [(Y Y^dagger)^-1]_{kl} / <psi_k|psi_l>.
// Anti-degradability is always evaluated as degradability of the conjugate
// channel, which stays well-defined in the rectangular d_E != d cases.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcap/channel.hpp"

namespace qcap {

enum class Verdict { Degradable, AntiDegradable, Both, Neither, Inconclusive };

std::string to_string(Verdict v);

struct DegradabilityReport {
  Verdict verdict = Verdict::Inconclusive;
  double deg_margin = 0.0;      // min eig(tau_Phi) / tr(tau_Phi)
  double antideg_margin = 0.0;  // same, roles reversed
  std::vector<std::string> condition_flags;
};

// Result of building the candidate degrading map Phi = T~ o T^-1.
struct PhiJamiolkowski {
  JamiolkowskiOperator tau;     // of Phi, Hermitized
  double trace = 0.0;           // tr tau_Phi (= d when Phi is TP)
  double min_eigenvalue = 0.0;
  double margin = 0.0;          // min_eigenvalue / tr
  bool pinv_used = false;
  bool conclusive_false = false;  // no linear degrading map exists
  bool inconclusive = false;
  double solve_residual = 0.0;       // ||Phi_tm tau_gamma - tau~_gamma|| rel
  double hermiticity_residual = 0.0;
  std::vector<std::string> flags;
};

PhiJamiolkowski phi_jamiolkowski(const QuantumChannel& t);

struct DegradabilityTest {
  std::optional<bool> degradable;  // nullopt when inconclusive
  double margin = 0.0;
  std::vector<std::string> flags;
};

DegradabilityTest is_degradable(const QuantumChannel& t, double tolerance = tol::psd);
DegradabilityTest is_antidegradable(const QuantumChannel& t, double tolerance = tol::psd);

DegradabilityReport classify(const QuantumChannel& t, double tolerance = tol::psd);

struct TwistedDiagonalForm {
  CMatrix x;          // right multiplier
  CMatrix y;          // left multiplier
  CMatrix diagonals;  // d_E x d, row i holds diag(Y A_i X)
  CMatrix psi;        // d_E x d, column l is the normalized |psi_l>
  double residual = 0.0;  // max_i ||Y A_i X - diag||_F
  bool perturbed = false;
};

// Computes invertible X, Y with Y A_i X diagonal for a two-Kraus channel
// via the polar decomposition of A_1 and the eigenbasis of
// P1^{-1/2} U1^dagger A_2 P1^{-1/2}. Channels whose Kraus operators are
// already diagonal return X = Y = 1. Throws when the remaining part is
// defective ("not twist-diagonalizable to tolerance").
TwistedDiagonalForm twist_diagonalize(const QuantumChannel& t);

struct HMatrix {
  CMatrix matrix;  // d x d Hermitian
  double min_eigenvalue = 0.0;
};

// H_{kl} = [(Y Y^dagger)^-1]_{kl} / <psi_k|psi_l>. Throws when any overlap
// falls below 1e-10 in magnitude (fall back to the transfer criterion).
HMatrix h_matrix(const TwistedDiagonalForm& f);

// tau = sum_{kl} H_{kl} |psi_l><psi_k| (x) |l><k|, the Jamiolkowski
// operator of Psi = T~ T_X (T_Y T T_X)^-1. Shares its nonzero spectrum
// with H.
JamiolkowskiOperator psi_jamiolkowski_from_h(const TwistedDiagonalForm& f,
                                             const HMatrix& h);

struct HCriterionResult {
  std::optional<bool> degradable;
  double margin = 0.0;        // min eig(H) / tr(H) when the H path ran
  bool used_fallback = false; // transfer criterion used instead
  std::vector<std::string> flags;
};

// H >= 0 criterion for d_E = 2 channels; falls back to is_degradable with
// an explicit flag when twist-diagonalization or the overlaps fail.
HCriterionResult is_degradable_via_h(const QuantumChannel& t,
                                     double tolerance = tol::psd);

}  // namespace qcap
