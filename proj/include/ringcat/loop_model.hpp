#pragma once

#include <optional>
#include <vector>

#include "ringcat/types.hpp"

namespace ringcat::loop {

/// Continuum 1-D ring of circumference L. Natural units ħ = m = 1 by default.
struct LoopParams {
  double length = 1.0;
  double hbar = 1.0;
  double mass = 1.0;
  double interaction = 1.0;            // δ-interaction strength V
  double barrier = 0.0;                // δ-barrier strength b
  std::optional<double> barrier_pos;   // defaults to L/2

  /// C = (ħ²/2m)(2π/L)².
  double energy_scale() const;
  double barrier_position() const { return barrier_pos.value_or(0.5 * length); }
  void validate() const;
};

/// C (k − φ/2π)² for a single atom with flow quantum k.
double loop_single_energy(int k, double phi, const LoopParams& params);

/// Frame velocity carried by the applied phase, (ħ/m)(φ/L).
double applied_phase_velocity(double phi, const LoopParams& params);

/// N atoms sharing flow k: N C (k − φ/2π)².
double single_flow_energy_n(int n_particles, int k, double phi, const LoopParams& params);

/// Lowest `n_levels` single-particle levels with a barrier b δ(x − x0): plane waves
/// k ∈ [−k_max, k_max], diagonal C (k − φ/2π)², off-diagonal (b/L) e^{i(k'−k)2πx0/L}.
/// The k = k' part of the barrier, a constant b/L, is left out.
RealVector loop_spectrum_with_barrier(double phi, const LoopParams& params, int k_max,
                                      int n_levels);

/// δ-interaction energy of bosons with the given flow quanta:
/// V [N(N−1) − Σ_k n_k(n_k−1)/2]; same-flow pairs give V, distinct-flow pairs 2V.
double delta_interaction_expectation(const std::vector<int>& flows, double v);

struct CouplingEstimate {
  double analytic = 0.0;        // V (N/2) ((N−1)/(2L)) / (2π)^{N−1}
  std::optional<Complex> quadrature;  // <ψ1| V_I |ψ0>, absent for N > 4
  bool oracle_available = false;
  bool discrepant = false;      // | analytic − |quadrature| | beyond 1e−6 relative
};

/// The closed-form N-atom coupling between the zero-flow and one-flow single-flow states
/// next to a direct quadrature of the same matrix element over plane waves
/// ψ0 = L^{−N/2}, ψ1 = e^{i2π(x1+…+xN)/L} L^{−N/2}.
CouplingEstimate coupling_v01(int n_particles, double v, const LoopParams& params);

}  // namespace ringcat::loop
