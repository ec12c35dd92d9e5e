#include "qcap/matrix_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcap {

namespace {

std::string bound_message(const char* op, const char* what, double got,
                          double bound) {
  std::ostringstream os;
  os << op << ": " << what << " = " << got << " exceeds " << bound;
  return os.str();
}

}  // namespace

double fro(const CMatrix& m) { return m.norm(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).norm() / std::max(1.0, m.norm());
}

void check_desk_scale(const CMatrix& m, const char* where) {
  if (m.size() == 0) {
    throw std::invalid_argument(std::string(where) + ": empty matrix");
  }
  if (m.size() > tol::max_entries) {
    std::ostringstream os;
    os << where << ": matrix has " << m.size() << " entries, limit is "
       << tol::max_entries;
    throw std::invalid_argument(os.str());
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(where) +
                                ": matrix has non-finite entries");
  }
}

HermitianEigensystem herm_eigensystem(const CMatrix& m) {
  check_desk_scale(m, "herm_eigensystem");
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("herm_eigensystem: matrix not square");
  }
  const double defect = (m - m.adjoint()).norm();
  const double bound = tol::hermiticity * std::max(1.0, m.norm());
  if (defect > bound) {
    throw std::invalid_argument(bound_message(
        "herm_eigensystem", "||M - M^dagger||_F", defect, bound));
  }
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eigensystem: eigensolver failed");
  }
  // Eigen sorts ascending; the contract wants descending.
  const Eigen::Index n = h.rows();
  HermitianEigensystem out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = CMatrix(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

GeneralEigensystem general_eigendecomposition(const CMatrix& m) {
  check_desk_scale(m, "general_eigendecomposition");
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("general_eigendecomposition: not square");
  }
  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("general_eigendecomposition: solver failed");
  }
  GeneralEigensystem out;
  out.right_vectors = solver.eigenvectors();
  out.eigenvalues = solver.eigenvalues();
  out.vector_condition = condition_number(out.right_vectors);
  if (out.vector_condition > tol::condition_cutoff) {
    std::ostringstream os;
    os << "general_eigendecomposition: not diagonalizable to tolerance "
          "(eigenvector condition "
       << out.vector_condition << " > " << tol::condition_cutoff << ")";
    throw std::runtime_error(os.str());
  }
  return out;
}

PolarDecomposition polar_decompose(const CMatrix& a) {
  check_desk_scale(a, "polar_decompose");
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("polar_decompose: not square");
  }
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) < 1e-12 * s(0)) {
    std::ostringstream os;
    os << "polar_decompose: polar factor not unique (sigma_min/sigma_max = "
       << (s(0) > 0 ? s(s.size() - 1) / s(0) : 0.0) << " < 1e-12)";
    throw std::invalid_argument(os.str());
  }
  PolarDecomposition out;
  out.unitary = svd.matrixU() * svd.matrixV().adjoint();
  out.positive = svd.matrixV() * s.asDiagonal().toDenseMatrix().cast<Complex>() *
                 svd.matrixV().adjoint();
  out.positive = 0.5 * (out.positive + out.positive.adjoint());
  return out;
}

double condition_number(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smax == 0.0) return 0.0;
  if (smin <= smax * 1e-300) return 1e300;
  return smax / smin;
}

CMatrix pinv_solve(const CMatrix& a, const CMatrix& b, double rcond) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cutoff = rcond * s(0);
  RVector inv = RVector::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) inv(i) = 1.0 / s(i);
  }
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() *
         svd.matrixU().adjoint() * b;
}

LinearSolveResult solve_or_pinv(const CMatrix& m, const CMatrix& b) {
  check_desk_scale(m, "solve_or_pinv");
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("solve_or_pinv: M not square");
  }
  if (m.rows() != b.rows()) {
    throw std::invalid_argument("solve_or_pinv: dimension mismatch");
  }
  LinearSolveResult out;
  out.condition = condition_number(m);
  if (out.condition <= tol::condition_cutoff) {
    out.solution = m.fullPivLu().solve(b);
    return out;
  }
  out.rank_deficient = true;
  out.solution = pinv_solve(m, b);
  return out;
}

double von_neumann_entropy(const CMatrix& rho) {
  const auto eig = herm_eigensystem(rho);
  const double trace = eig.eigenvalues.sum();
  if (std::abs(trace - 1.0) > tol::trace_one) {
    std::ostringstream os;
    os << "von_neumann_entropy: trace " << trace << " differs from 1 by more than "
       << tol::trace_one;
    throw std::invalid_argument(os.str());
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues(i);
    if (lambda < -tol::eig_clamp) {
      std::ostringstream os;
      os << "von_neumann_entropy: not a state (eigenvalue " << lambda
         << " below " << -tol::eig_clamp << ")";
      throw std::invalid_argument(os.str());
    }
    if (lambda <= 0.0) continue;  // clamp window [-1e-12, 0) and exact zero
    s -= lambda * std::log2(lambda);
  }
  return s;
}

double binary_entropy(double x) {
  if (x < -tol::eig_clamp || x > 1.0 + tol::eig_clamp || !std::isfinite(x)) {
    std::ostringstream os;
    os << "binary_entropy: argument " << x << " outside [0, 1]";
    throw std::domain_error(os.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  const auto term = [](double t) { return t > 0.0 ? -t * std::log2(t) : 0.0; };
  return term(x) + term(1.0 - x);
}

CMatrix partial_trace(const CMatrix& m, Subsystem traced, int dim_a,
                      int dim_b) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (traced == Subsystem::B) {
    CMatrix out = CMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int b = 0; b < dim_b; ++b)
          out(i, j) += m(i * dim_b + b, j * dim_b + b);
    return out;
  }
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a)
    for (int i = 0; i < dim_b; ++i)
      for (int j = 0; j < dim_b; ++j)
        out(i, j) += m(a * dim_b + i, a * dim_b + j);
  return out;
}

}  // namespace qcap
