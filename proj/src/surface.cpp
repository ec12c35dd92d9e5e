#include "qcap/surface.hpp"

#include <sstream>
#include <stdexcept>

#include "qcap/channel_io.hpp"

namespace qcap {

SurfaceTable capacity_surface(double alpha_lo, double alpha_hi, double beta_lo,
                              double beta_hi, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("capacity_surface: resolution >= 2");
  }
  SurfaceTable table;
  table.alpha_grid.reserve(resolution);
  table.beta_grid.reserve(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double t = static_cast<double>(i) / (resolution - 1);
    table.alpha_grid.push_back(alpha_lo + t * (alpha_hi - alpha_lo));
    table.beta_grid.push_back(beta_lo + t * (beta_hi - beta_lo));
  }
  table.rows.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (const double alpha : table.alpha_grid) {
    for (const double beta : table.beta_grid) {
      SurfaceRow row;
      row.alpha = alpha;
      row.beta = beta;
      row.capacity = qubit_capacity({alpha, beta}).value;
      row.verdict = classify(from_normal_form({alpha, beta})).verdict;
      table.rows.push_back(row);
    }
  }
  return table;
}

std::string surface_to_csv(const SurfaceTable& table) {
  std::ostringstream os;
  os << "alpha,beta,capacity,verdict\n";
  for (const auto& row : table.rows) {
    os << surface_row(row.alpha, row.beta, row.capacity, row.verdict) << "\n";
  }
  return os.str();
}

}  // namespace qcap
