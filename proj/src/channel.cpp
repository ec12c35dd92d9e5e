#include "qcap/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcap {

namespace {

void check_kraus_list(const std::vector<CMatrix>& kraus) {
  if (kraus.empty()) {
    throw std::invalid_argument("QuantumChannel: empty Kraus list");
  }
  const Eigen::Index rows = kraus.front().rows();
  const Eigen::Index cols = kraus.front().cols();
  if (rows < 1 || cols < 1 || rows > 16 || cols > 16) {
    throw std::invalid_argument(
        "QuantumChannel: dimensions must be between 1 and 16");
  }
  for (const auto& a : kraus) {
    if (a.rows() != rows || a.cols() != cols) {
      throw std::invalid_argument(
          "QuantumChannel: inconsistent Kraus operator shapes");
    }
    if (!a.allFinite()) {
      throw std::invalid_argument(
          "QuantumChannel: Kraus operator has non-finite entries");
    }
  }
  if (static_cast<Eigen::Index>(kraus.size()) > rows * cols) {
    std::ostringstream os;
    os << "QuantumChannel: " << kraus.size()
       << " Kraus operators exceed d_in*d_out = " << rows * cols;
    throw std::invalid_argument(os.str());
  }
}

// Row-major vec(A)[i * cols + j] = A(i, j).
CVector vec(const CMatrix& a) {
  CVector v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

// Index reshuffle O[(r1,c1),(r2,c2)] = M[(r1,r2),(c1,c2)] for row factors
// (a, b) and column factors (c, d). Applying the matching reshuffle twice
// is the identity.
CMatrix reshuffle(const CMatrix& m, int a, int b, int c, int d) {
  if (m.rows() != static_cast<Eigen::Index>(a) * b ||
      m.cols() != static_cast<Eigen::Index>(c) * d) {
    throw std::invalid_argument("involution_gamma: dimensions do not factor");
  }
  CMatrix out(static_cast<Eigen::Index>(a) * c, static_cast<Eigen::Index>(b) * d);
  for (int r1 = 0; r1 < a; ++r1)
    for (int r2 = 0; r2 < b; ++r2)
      for (int c1 = 0; c1 < c; ++c1)
        for (int c2 = 0; c2 < d; ++c2)
          out(r1 * c + c1, r2 * d + c2) = m(r1 * b + r2, c1 * d + c2);
  return out;
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<CMatrix> kraus) {
  check_kraus_list(kraus);
  kraus_ = std::move(kraus);
  d_out_ = static_cast<int>(kraus_.front().rows());
  d_in_ = static_cast<int>(kraus_.front().cols());
  const double residual = tp_residual();
  if (residual > tol::trace_one) {
    std::ostringstream os;
    os << "QuantumChannel: not trace preserving, ||sum A^dag A - 1||_F = "
       << residual;
    throw std::invalid_argument(os.str());
  }
}

QuantumChannel QuantumChannel::unchecked(std::vector<CMatrix> kraus) {
  check_kraus_list(kraus);
  QuantumChannel t;
  t.kraus_ = std::move(kraus);
  t.d_out_ = static_cast<int>(t.kraus_.front().rows());
  t.d_in_ = static_cast<int>(t.kraus_.front().cols());
  return t;
}

double QuantumChannel::tp_residual() const {
  CMatrix sum = CMatrix::Zero(d_in_, d_in_);
  for (const auto& a : kraus_) sum += a.adjoint() * a;
  return (sum - CMatrix::Identity(d_in_, d_in_)).norm();
}

CMatrix apply(const QuantumChannel& t, const CMatrix& rho) {
  if (rho.rows() != t.d_in() || rho.cols() != t.d_in()) {
    throw std::invalid_argument("apply: state dimension mismatch");
  }
  CMatrix out = CMatrix::Zero(t.d_out(), t.d_out());
  for (const auto& a : t.kraus()) out += a * rho * a.adjoint();
  return out;
}

QuantumChannel conjugate(const QuantumChannel& t) {
  const int d_env = t.env_dim();
  std::vector<CMatrix> conj_kraus;
  conj_kraus.reserve(t.d_out());
  for (int i = 0; i < t.d_out(); ++i) {
    CMatrix ai(d_env, t.d_in());
    for (int k = 0; k < d_env; ++k) ai.row(k) = t.kraus()[k].row(i);
    conj_kraus.push_back(std::move(ai));
  }
  // TP is forced by the index rule whenever the source is TP.
  return QuantumChannel(std::move(conj_kraus));
}

JamiolkowskiOperator jamiolkowski(const QuantumChannel& t) {
  JamiolkowskiOperator out;
  out.d_out = t.d_out();
  out.d_in = t.d_in();
  const Eigen::Index dim = static_cast<Eigen::Index>(out.d_out) * out.d_in;
  out.matrix = CMatrix::Zero(dim, dim);
  for (const auto& a : t.kraus()) {
    const CVector v = vec(a);
    out.matrix += v * v.adjoint();
  }
  return out;
}

TransferMatrix transfer_matrix(const QuantumChannel& t) {
  TransferMatrix out;
  out.d_out = t.d_out();
  out.d_in = t.d_in();
  const Eigen::Index rows = static_cast<Eigen::Index>(out.d_out) * out.d_out;
  const Eigen::Index cols = static_cast<Eigen::Index>(out.d_in) * out.d_in;
  out.matrix = CMatrix::Zero(rows, cols);
  for (const auto& a : t.kraus()) {
    out.matrix += kron(a, a.conjugate());
  }
  return out;
}

TransferMatrix involution_gamma(const JamiolkowskiOperator& tau) {
  TransferMatrix out;
  out.d_out = tau.d_out;
  out.d_in = tau.d_in;
  out.matrix = reshuffle(tau.matrix, tau.d_out, tau.d_in, tau.d_out, tau.d_in);
  return out;
}

JamiolkowskiOperator involution_gamma(const TransferMatrix& tg) {
  JamiolkowskiOperator out;
  out.d_out = tg.d_out;
  out.d_in = tg.d_in;
  out.matrix = reshuffle(tg.matrix, tg.d_out, tg.d_out, tg.d_in, tg.d_in);
  return out;
}

QuantumChannel compose(const QuantumChannel& t1, const QuantumChannel& t2) {
  if (t2.d_out() != t1.d_in()) {
    throw std::invalid_argument("compose: d_out(T2) != d_in(T1)");
  }
  std::vector<CMatrix> kraus;
  kraus.reserve(t1.kraus().size() * t2.kraus().size());
  for (const auto& a : t1.kraus())
    for (const auto& b : t2.kraus()) kraus.push_back(a * b);
  return QuantumChannel(std::move(kraus));
}

QuantumChannel identity_channel(int d) {
  return QuantumChannel({CMatrix::Identity(d, d)});
}

QuantumChannel from_normal_form(const NormalFormParams& p) {
  CMatrix a1 = CMatrix::Zero(2, 2);
  CMatrix a2 = CMatrix::Zero(2, 2);
  a1(0, 0) = std::cos(p.alpha);
  a1(1, 1) = std::cos(p.beta);
  a2(0, 1) = std::sin(p.beta);
  a2(1, 0) = std::sin(p.alpha);
  return QuantumChannel({std::move(a1), std::move(a2)});
}

QuantumChannel from_isometry(const CMatrix& v, int env_dim) {
  const int d = static_cast<int>(v.cols());
  if (env_dim < 1 || v.rows() != static_cast<Eigen::Index>(d) * env_dim) {
    throw std::invalid_argument("from_isometry: rows must equal d * d_E");
  }
  const double defect =
      (v.adjoint() * v - CMatrix::Identity(d, d)).norm();
  if (defect > tol::trace_one) {
    std::ostringstream os;
    os << "from_isometry: V^dagger V - 1 has norm " << defect << " > "
       << tol::trace_one;
    throw std::invalid_argument(os.str());
  }
  std::vector<CMatrix> kraus;
  kraus.reserve(env_dim);
  for (int i = 0; i < env_dim; ++i) {
    CMatrix a(d, d);
    for (int s = 0; s < d; ++s) a.row(s) = v.row(s * env_dim + i);
    kraus.push_back(std::move(a));
  }
  return QuantumChannel(std::move(kraus));
}

int kraus_rank(const QuantumChannel& t) {
  const auto tau = jamiolkowski(t);
  const auto eig = herm_eigensystem(tau.matrix);
  const double cutoff = 1e-9 * eig.eigenvalues.sum();
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues(i) > cutoff) ++rank;
  }
  return rank;
}

QuantumChannel convex_mixture(
    const std::vector<std::pair<double, QuantumChannel>>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("convex_mixture: no terms");
  }
  double total = 0.0;
  for (const auto& [w, t] : terms) {
    if (w < -1e-12) {
      throw std::invalid_argument("convex_mixture: negative weight");
    }
    total += w;
    if (t.d_in() != terms.front().second.d_in() ||
        t.d_out() != terms.front().second.d_out()) {
      throw std::invalid_argument("convex_mixture: dimension mismatch");
    }
  }
  if (std::abs(total - 1.0) > tol::trace_one) {
    std::ostringstream os;
    os << "convex_mixture: weights sum to " << total;
    throw std::invalid_argument(os.str());
  }
  std::vector<CMatrix> kraus;
  for (const auto& [w, t] : terms) {
    const double root = std::sqrt(std::max(w, 0.0));
    for (const auto& a : t.kraus()) kraus.push_back(root * a);
  }
  return QuantumChannel(std::move(kraus));
}

ChannelReport validate(const QuantumChannel& t) {
  ChannelReport r;
  const auto tau = jamiolkowski(t);
  const CMatrix herm = 0.5 * (tau.matrix + tau.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  r.cp_margin = solver.eigenvalues().minCoeff();
  r.tp_residual = t.tp_residual();
  return r;
}

}  // namespace qcap
