#include "acc2omp/jacobi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace acc2omp {

JacobiField jacobi_solve(const JacobiParams& p) {
  if (p.nx < 3 || p.ny < 3) throw std::invalid_argument("grid needs nx, ny >= 3");
  if (!(p.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (p.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  JacobiField field;
  field.nx = p.nx;
  field.ny = p.ny;
  field.values.assign(static_cast<std::size_t>(p.nx) * p.ny, 0.0);
  for (int i = 0; i < p.nx; ++i) field.at(i, p.ny - 1) = 1.0;

  std::vector<double> next = field.values;
  double max_err = std::numeric_limits<double>::max();
  int iter = 0;
  while (max_err > p.tolerance && iter < p.max_iter) {
    for (int j = 1; j < p.ny - 1; ++j) {
      for (int i = 1; i < p.nx - 1; ++i) {
        const double df_x = field.at(i + 1, j) + field.at(i - 1, j);
        const double df_y = field.at(i, j + 1) + field.at(i, j - 1);
        next[static_cast<std::size_t>(i + p.nx * j)] = 0.25 * (df_x + df_y);
      }
    }
    max_err = 0.0;
    for (int j = 1; j < p.ny - 1; ++j) {
      for (int i = 1; i < p.nx - 1; ++i) {
        const double v = next[static_cast<std::size_t>(i + p.nx * j)];
        max_err = std::max(std::fabs(v - field.at(i, j)), max_err);
        field.at(i, j) = v;
      }
    }
    ++iter;
  }

  field.iter = iter;
  field.max_err = max_err;
  return field;
}

double peak_flops(const PeakSpec& s) {
  if (!(s.clock_hz > 0.0) || s.cores <= 0 || !(s.flop_per_cycle > 0.0))
    throw std::invalid_argument("peak spec fields must be positive");
  return s.clock_hz * static_cast<double>(s.cores) * s.flop_per_cycle;
}

}  // namespace acc2omp
