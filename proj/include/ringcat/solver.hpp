#pragma once

#include <vector>

#include "ringcat/hamiltonian.hpp"
#include "ringcat/types.hpp"

namespace ringcat {

/// Lowest eigenpairs, energies ascending, vectors as columns.
struct EigenResult {
  RealVector energies;
  ComplexMatrix vectors;
};

/// Dense Hermitian diagonalization returning the lowest `n_levels` pairs. Verifies
/// ‖Hv − Ev‖ ≤ 1e−9·‖H‖ and pairwise overlaps ≤ 1e−9, throwing NumericalContractError
/// on failure. Raw matrices are checked for Hermiticity (1e−12) first.
EigenResult eigensolve(const ComplexMatrix& h, Eigen::Index n_levels);
EigenResult eigensolve(const HermitianOperator& h, Eigen::Index n_levels);

struct SpectrumRow {
  double phi;
  int level;
  double energy;
};

struct SpectrumTable {
  ModelParams params;
  std::vector<SpectrumRow> rows;  // ordered by (phi index, level)
};

/// Evenly spaced grid; count == 1 yields {start}.
std::vector<double> linear_grid(double start, double stop, std::size_t count);

/// Diagonalizes the site Hamiltonian at every grid phase. n_levels is clamped to the
/// Hilbert-space dimension.
SpectrumTable spectrum_sweep(const ModelParams& params, const std::vector<double>& phi_grid,
                             int n_levels, unsigned threads = 1);

}  // namespace ringcat
