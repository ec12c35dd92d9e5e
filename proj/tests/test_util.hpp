// Seeded generators shared across the test files.
#pragma once

#include <random>

#include "qcap/channel.hpp"

namespace qcap::testing {

inline CMatrix random_complex(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  return m;
}

inline CMatrix random_hermitian(std::mt19937_64& rng, int d) {
  const CMatrix g = random_complex(rng, d, d);
  return 0.5 * (g + g.adjoint());
}

inline CMatrix random_density(std::mt19937_64& rng, int d) {
  const CMatrix g = random_complex(rng, d, d);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

inline CMatrix random_unitary(std::mt19937_64& rng, int d) {
  const CMatrix g = random_complex(rng, d, d);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

// Invertible with singular values in [0.5, 2.0].
inline CMatrix random_invertible(std::mt19937_64& rng, int d) {
  RVector s(d);
  for (int i = 0; i < d; ++i)
    s(i) = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
  return random_unitary(rng, d) * s.cast<Complex>().asDiagonal() *
         random_unitary(rng, d);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace qcap::testing
