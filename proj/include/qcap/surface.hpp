// Capacity-surface generation over the qubit normal form (the alpha/beta
// landscape with unit peaks at the unitary corners and a zero plateau on
// the anti-degradable region).
#pragma once

#include <string>
#include <vector>

#include "qcap/capacity.hpp"

namespace qcap {

struct SurfaceRow {
  double alpha = 0.0;
  double beta = 0.0;
  double capacity = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

struct SurfaceTable {
  std::vector<double> alpha_grid;
  std::vector<double> beta_grid;
  std::vector<SurfaceRow> rows;  // row-major: alpha outer, beta inner
};

SurfaceTable capacity_surface(double alpha_lo, double alpha_hi, double beta_lo,
                              double beta_hi, int resolution);

// Header "alpha,beta,capacity,verdict", LF line endings, %.9f columns.
std::string surface_to_csv(const SurfaceTable& table);

}  // namespace qcap
