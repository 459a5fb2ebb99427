#pragma once

#include <vector>

namespace acc2omp {

/// Dirichlet data for the square test problem: the top edge (j = ny-1) is
/// held at 1.0, the other edges at 0.0; the interior starts at 0.0.
enum class BoundaryKind { HotTop };

struct JacobiParams {
  int nx = 0;  // grid points per direction, boundary included (>= 3)
  int ny = 0;
  double tolerance = 0.0;  // convergence threshold on the max update (> 0)
  int max_iter = 0;        // iteration cap (>= 1)
  BoundaryKind boundary = BoundaryKind::HotTop;
};

struct JacobiField {
  int nx = 0;
  int ny = 0;
  std::vector<double> values;  // index (i, j) at i + nx*j
  int iter = 0;                // sweeps performed
  double max_err = 0.0;        // final maximum update magnitude

  double at(int i, int j) const { return values[static_cast<std::size_t>(i + nx * j)]; }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i + nx * j)]; }
};

/// Two-phase Jacobi sweep for the five-point Laplace stencil: update every
/// interior point to the average of its four neighbours, then take the max
/// update and copy. Runs until max_err <= tolerance or the iteration cap;
/// hitting the cap with max_err > tolerance reports non-convergence through
/// the returned fields, not an error. Throws std::invalid_argument when the
/// parameter invariants are violated.
JacobiField jacobi_solve(const JacobiParams& p);

struct PeakSpec {
  double clock_hz = 0.0;
  int cores = 0;
  double flop_per_cycle = 0.0;
};

/// clock_hz * cores * flop_per_cycle. Throws std::invalid_argument when a
/// field is not positive.
double peak_flops(const PeakSpec& s);

}  // namespace acc2omp
