// Dense complex linear algebra and entropy primitives for desk-scale
// matrices (dimension <= 16). All routines carry explicit tolerance
// contracts and reject inputs that violate them instead of degrading
// silently.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace qcap {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Tolerance knobs, fixed project-wide. Inversions share a single condition
// cutoff; anything beyond it routes to the pseudo-inverse/flagged paths.
namespace tol {
inline constexpr double hermiticity = 1e-9;
inline constexpr double reconstruction = 1e-10;
inline constexpr double general_reconstruction = 1e-8;
inline constexpr double condition_cutoff = 1e10;
inline constexpr double eig_clamp = 1e-12;
inline constexpr double trace_one = 1e-9;
inline constexpr double psd = 1e-9;
inline constexpr int max_entries = 256;  // 16 x 16
}  // namespace tol

struct HermitianEigensystem {
  RVector eigenvalues;   // real, descending
  CMatrix eigenvectors;  // orthonormal columns, matching order
};

struct GeneralEigensystem {
  CMatrix right_vectors;    // columns of R in M = R diag(w) R^-1
  CVector eigenvalues;      // w
  double vector_condition;  // cond(R), reported to the caller
};

struct PolarDecomposition {
  CMatrix unitary;   // U
  CMatrix positive;  // P, Hermitian PSD; A = U P
};

struct LinearSolveResult {
  CMatrix solution;
  bool rank_deficient = false;  // pseudo-inverse was used
  double condition = 0.0;       // sigma_max / sigma_min (inf-safe huge value)
};

// Frobenius norm shorthand used in the tolerance contracts.
double fro(const CMatrix& m);

// Kronecker product, (A (x) B)[(i,j),(k,l)] = A(i,k) B(j,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Relative Hermiticity defect ||M - M^dagger||_F / max(1, ||M||_F).
double hermiticity_defect(const CMatrix& m);

// Throws std::invalid_argument if m has NaN/Inf entries or more than
// tol::max_entries entries; `where` names the operation for the message.
void check_desk_scale(const CMatrix& m, const char* where);

// Eigendecomposition of a Hermitian matrix. Eigenvalues descending.
// Rejects inputs with ||M - M^dagger||_F > 1e-9 * max(1, ||M||_F).
HermitianEigensystem herm_eigensystem(const CMatrix& m);

// Eigendecomposition of a general square matrix, M = R diag(w) R^-1.
// Throws when the eigenvector matrix has condition > 1e10 ("not
// diagonalizable to tolerance"), which covers defective inputs.
GeneralEigensystem general_eigendecomposition(const CMatrix& m);

// Polar decomposition A = U P of an invertible square matrix.
// Throws "polar factor not unique" when sigma_min < 1e-12 * sigma_max.
PolarDecomposition polar_decompose(const CMatrix& a);

// Solves M X = B for square M. Uses the inverse when cond(M) <= 1e10,
// otherwise the least-squares pseudo-inverse solution with the
// rank_deficient flag set. Never throws on conditioning.
LinearSolveResult solve_or_pinv(const CMatrix& m, const CMatrix& b);

// Least-squares X = pinv(A) * B for arbitrary rectangular A. Singular
// values below rcond * sigma_max are treated as zero.
CMatrix pinv_solve(const CMatrix& a, const CMatrix& b, double rcond = 1e-12);

// Condition number sigma_max / sigma_min; returns +inf-like 1e300 when
// sigma_min underflows.
double condition_number(const CMatrix& m);

// Von Neumann entropy -tr[rho log2 rho] in bits. Eigenvalues in
// [-1e-12, 0) are clamped to zero; anything more negative is rejected
// ("not a state"). Requires tr(rho) within 1e-9 of 1.
double von_neumann_entropy(const CMatrix& rho);

// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x) with 0 log 0 := 0.
// x is clamped from [-1e-12, 1+1e-12]; outside that window -> domain error.
double binary_entropy(double x);

enum class Subsystem { A, B };

// Partial trace over the named factor of a (dim_a * dim_b)-dimensional
// bipartite matrix with A-major index ordering (i, j) -> i * dim_b + j.
CMatrix partial_trace(const CMatrix& m, Subsystem traced, int dim_a,
                      int dim_b);

}  // namespace qcap
