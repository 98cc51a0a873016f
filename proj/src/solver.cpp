#include "ringcat/solver.hpp"

#include <string>

#include "ringcat/errors.hpp"
#include "ringcat/parallel.hpp"

namespace ringcat {

EigenResult eigensolve(const ComplexMatrix& h, Eigen::Index n_levels) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw InvalidArgument("eigensolve: matrix must be square and non-empty");
  }
  if (n_levels < 1 || n_levels > h.rows()) {
    throw InvalidArgument("eigensolve: n_levels must lie in [1, " + std::to_string(h.rows()) +
                          "], got " + std::to_string(n_levels));
  }
  const double defect = hermiticity_defect(h);
  if (!(defect <= 1e-12)) {
    throw NumericalContractError("eigensolve: input is not Hermitian (max |H - H^dagger| = " +
                                 std::to_string(defect) + ")");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalContractError("eigensolve: Hermitian eigensolver did not converge");
  }
  EigenResult result{solver.eigenvalues().head(n_levels),
                     solver.eigenvectors().leftCols(n_levels)};

  const double norm = solver.eigenvalues().cwiseAbs().maxCoeff();
  const double residual_bound = 1e-9 * std::max(norm, 1e-300);
  for (Eigen::Index i = 0; i < n_levels; ++i) {
    const auto v = result.vectors.col(i);
    const double residual = (h * v - result.energies[i] * v).norm();
    if (residual > residual_bound) {
      throw NumericalContractError("eigensolve: residual " + std::to_string(residual) +
                                   " exceeds bound for level " + std::to_string(i));
    }
  }
  const ComplexMatrix gram = result.vectors.adjoint() * result.vectors;
  const double overlap =
      (gram - ComplexMatrix::Identity(n_levels, n_levels)).cwiseAbs().maxCoeff();
  if (overlap > 1e-9) {
    throw NumericalContractError("eigensolve: eigenvectors not orthonormal (defect " +
                                 std::to_string(overlap) + ")");
  }
  return result;
}

EigenResult eigensolve(const HermitianOperator& h, Eigen::Index n_levels) {
  return eigensolve(h.matrix(), n_levels);
}

std::vector<double> linear_grid(double start, double stop, std::size_t count) {
  if (count == 0) throw InvalidArgument("grid needs at least one point");
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = start;
    return grid;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + step * static_cast<double>(i);
  grid.back() = stop;
  return grid;
}

SpectrumTable spectrum_sweep(const ModelParams& params, const std::vector<double>& phi_grid,
                             int n_levels, unsigned threads) {
  if (phi_grid.empty()) throw InvalidArgument("spectrum_sweep: empty phase grid");
  params.validate();
  const auto dim = static_cast<int>(fock_dimension(params.n));
  if (n_levels < 1) throw InvalidArgument("spectrum_sweep: n_levels must be >= 1");
  const int levels = std::min(n_levels, dim);

  std::vector<RealVector> energies(phi_grid.size());
  parallel_for(phi_grid.size(), threads, [&](std::size_t i) {
    const auto h = build_site_hamiltonian(params.with_phi(phi_grid[i]));
    energies[i] = eigensolve(h, levels).energies;
  });

  SpectrumTable table{params, {}};
  table.rows.reserve(phi_grid.size() * static_cast<std::size_t>(levels));
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    for (int l = 0; l < levels; ++l) table.rows.push_back({phi_grid[i], l, energies[i][l]});
  }
  return table;
}

}  // namespace ringcat
