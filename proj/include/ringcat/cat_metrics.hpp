#pragma once

#include <vector>

#include "ringcat/basis.hpp"
#include "ringcat/hamiltonian.hpp"
#include "ringcat/solver.hpp"
#include "ringcat/types.hpp"

namespace ringcat {

/// Weights of a state on the two single-flow states |N,0,0> (a0) and |0,N,0> (a1).
/// The global phase is fixed so that a0 is real and non-negative.
struct CatMetrics {
  Complex a0{};
  Complex a1{};
  double ratio = 0.0;          // |a0/a1|
  double captured_norm = 0.0;  // |a0|² + |a1|²
  double theta = 0.0;          // arg(a1) − arg(a0), in (−π, π]
  bool ratio_infinite = false;   // a1 = 0, a0 ≠ 0: ratio holds +inf
  bool ratio_undefined = false;  // a0 = a1 = 0: ratio holds NaN
};

/// Amplitudes below this magnitude count as zero when classifying the ratio.
inline constexpr double kZeroAmplitude = 1e-14;

/// `state` must have unit norm. Site-basis states are projected on
/// embed_single_flow(N, 0) and embed_single_flow(N, 1); flow-basis states are read at
/// the |N,0,0> and |0,N,0> components.
CatMetrics cat_amplitudes(const ComplexVector& state, BasisKind kind, int n_particles);

/// Ground vector used for cat metrics. When the two lowest levels are degenerate within
/// `degeneracy_tolerance`, the solver's basis of that plane is arbitrary; the returned
/// vector is then the combination maximizing the captured norm, or, if that is also
/// degenerate, the one with equal in-phase weights on the two single-flow states.
ComplexVector cat_ground_state(const EigenResult& lowest_two, BasisKind kind, int n_particles,
                               double degeneracy_tolerance);

struct CatScanRow {
  int n = 0;
  double u_over_j = 0.0;
  double dphi = 0.0;
  CatMetrics exact;
  double ratio_analytic = 0.0;
};

struct CatScanTable {
  ModelParams params;
  std::vector<CatScanRow> rows;  // Δφ ascending
};

/// For each Δφ: exact site-basis ground state at φ = π + Δφ and its cat metrics, next to
/// the two-level prediction |a0/a1| from predict_two_level.
CatScanTable catscan(const ModelParams& params, std::vector<double> dphi_grid,
                     unsigned threads = 1);

}  // namespace ringcat
