#include "ringcat/cat_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ringcat/effective.hpp"
#include "ringcat/errors.hpp"
#include "ringcat/parallel.hpp"

namespace ringcat {

namespace {

std::array<Complex, 2> project(const ComplexVector& state, BasisKind kind, int n) {
  if (kind == BasisKind::flow) {
    const FockBasis basis(n, BasisKind::flow);
    if (static_cast<std::size_t>(state.size()) != basis.size()) {
      throw InvalidArgument("cat_amplitudes: state dimension does not match N");
    }
    return {state[static_cast<Eigen::Index>(basis.index({n, 0, 0}))],
            state[static_cast<Eigen::Index>(basis.index({0, n, 0}))]};
  }
  const ComplexVector e0 = embed_single_flow(n, 0);
  const ComplexVector e1 = embed_single_flow(n, 1);
  if (state.size() != e0.size()) {
    throw InvalidArgument("cat_amplitudes: state dimension does not match N");
  }
  return {e0.dot(state), e1.dot(state)};  // dot() conjugates the left operand
}

double wrap_phase(double angle) {
  // std::arg already lands in [−π, π]; fold −π onto π.
  return angle <= -std::numbers::pi ? std::numbers::pi : angle;
}

}  // namespace

CatMetrics cat_amplitudes(const ComplexVector& state, BasisKind kind, int n_particles) {
  if (n_particles < 1) throw InvalidArgument("cat_amplitudes: N must be >= 1");
  auto [a0, a1] = project(state, kind, n_particles);

  CatMetrics m;
  const double m0 = std::abs(a0);
  const double m1 = std::abs(a1);
  const Complex gauge = m0 > 0.0 ? std::conj(a0) / m0 : (m1 > 0.0 ? std::conj(a1) / m1 : 1.0);
  m.a0 = a0 * gauge;
  m.a1 = a1 * gauge;
  m.a0 = Complex(std::abs(m.a0), 0.0);
  m.captured_norm = m0 * m0 + m1 * m1;
  m.theta = m1 > 0.0 ? wrap_phase(std::arg(m.a1)) : 0.0;

  if (m1 <= kZeroAmplitude) {
    if (m0 <= kZeroAmplitude) {
      m.ratio_undefined = true;
      m.ratio = std::numeric_limits<double>::quiet_NaN();
    } else {
      m.ratio_infinite = true;
      m.ratio = std::numeric_limits<double>::infinity();
    }
  } else {
    m.ratio = m0 / m1;
  }
  return m;
}

ComplexVector cat_ground_state(const EigenResult& lowest_two, BasisKind kind, int n_particles,
                               double degeneracy_tolerance) {
  const auto& v = lowest_two.vectors;
  if (v.cols() < 2 || lowest_two.energies[1] - lowest_two.energies[0] > degeneracy_tolerance) {
    return v.col(0);
  }
  // amplitudes(r, c): weight of eigenvector c on single-flow state r.
  ComplexMatrix amplitudes(2, 2);
  for (int c = 0; c < 2; ++c) {
    const auto [a0, a1] = project(v.col(c), kind, n_particles);
    amplitudes(0, c) = a0;
    amplitudes(1, c) = a1;
  }
  const ComplexMatrix captured = amplitudes.adjoint() * amplitudes;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(captured);
  Eigen::Vector2cd mix;
  const auto& w = solver.eigenvalues();
  if (w[1] - w[0] > 1e-10) {
    mix = solver.eigenvectors().col(1);
  } else {
    Eigen::FullPivLU<ComplexMatrix> lu(amplitudes);
    if (!lu.isInvertible()) return v.col(0);
    mix = lu.solve(Eigen::Vector2cd(1.0, 1.0));
  }
  ComplexVector state = v.leftCols(2) * mix;
  return state / state.norm();
}

CatScanTable catscan(const ModelParams& params, std::vector<double> dphi_grid, unsigned threads) {
  if (dphi_grid.empty()) throw InvalidArgument("catscan: empty detuning grid");
  params.validate();
  std::sort(dphi_grid.begin(), dphi_grid.end());

  const double e0 = degeneracy_energy(params);
  const double j = params.tunnelling[0];
  const double interaction = params.interaction == Interaction::contact ? params.u : params.u0;

  CatScanTable table{params, std::vector<CatScanRow>(dphi_grid.size())};
  parallel_for(dphi_grid.size(), threads, [&](std::size_t i) {
    const double phi = std::numbers::pi + dphi_grid[i];
    const auto h = build_site_hamiltonian(params.with_phi(phi));
    const auto lowest = eigensolve(h, std::min<Eigen::Index>(2, h.dimension()));
    const double scale = std::max(1.0, h.matrix().cwiseAbs().maxCoeff());
    const auto ground = cat_ground_state(lowest, BasisKind::site, params.n, 1e-9 * scale);

    CatScanRow& row = table.rows[i];
    row.n = params.n;
    row.u_over_j = interaction / j;
    row.dphi = dphi_grid[i];
    row.exact = cat_amplitudes(ground, BasisKind::site, params.n);
    row.ratio_analytic = predict_two_level(params, phi, e0).ratio_magnitude();
  });
  return table;
}

}  // namespace ringcat
