#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ringcat/basis.hpp"
#include "ringcat/hamiltonian.hpp"
#include "ringcat/types.hpp"

namespace ringcat {

/// Two-level reduction onto {|N,0,0>, |0,N,0>}:
///   E∓ = E0 ∓ sqrt(ε² + |V01|²),  a0/a1 = −V01 / (ε ∓ sqrt(ε² + |V01|²)).
/// The stored ratio is the ground branch (E−), i.e. the lower sign.
struct TwoLevelModel {
  double e0 = 0.0;
  double eps = 0.0;
  Complex v01{};
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double e_minus = 0.0;
  double e_plus = 0.0;
  Complex predicted_ratio{};
  bool indeterminate = false;  // ε = V01 = 0: any combination is an eigenvector

  /// |a0/a1|; +inf when the ground state sits entirely on |N,0,0>.
  double ratio_magnitude() const { return std::abs(predicted_ratio); }
};

TwoLevelModel two_level_predict(double e0, double eps, Complex v01);

/// Detuning of the uncoupled single-flow levels from their crossing:
/// ε(φ) = JN − 2JN cos(φ/3). Equal tunnelling only (UnsupportedConfiguration otherwise).
double epsilon_of_phi(const ModelParams& params, double phi);

struct CouplingEdge {
  std::size_t to;
  Complex value;  // H(from, to)
};

/// Flow states as nodes (diagonal energies) and the nonzero off-diagonal matrix
/// elements as directed edges; every edge has its conjugate partner.
class CouplingGraph {
 public:
  static constexpr double kEdgeThreshold = 1e-14;

  explicit CouplingGraph(const HermitianOperator& h_flow);

  std::size_t size() const { return nodes_.size(); }
  const Occupation& state(std::size_t i) const { return nodes_[i]; }
  double energy(std::size_t i) const { return energies_[i]; }
  /// Outgoing edges of node i, sorted by target index.
  const std::vector<CouplingEdge>& edges(std::size_t i) const { return adjacency_[i]; }
  std::size_t edge_count() const;
  std::size_t index(const Occupation& occ) const { return basis_.index(occ); }

  /// True when some chain of edges joins `from` and `to`.
  bool connected(std::size_t from, std::size_t to) const;

 private:
  FockBasis basis_;
  std::vector<Occupation> nodes_;
  std::vector<double> energies_;
  std::vector<std::vector<CouplingEdge>> adjacency_;
};

CouplingGraph build_coupling_graph(const HermitianOperator& h_flow);

struct LowdinResult {
  Complex v01{};
  double lambda = 0.0;
  ComplexMatrix effective;  // 2×2 H_PP + H_PQ (λ − H_QQ)⁻¹ H_QP at the converged λ
  int iterations = 0;
  std::size_t eliminated = 0;  // |Q|
};

/// Exact elimination of every state outside P = {first, second}. With equal tunnelling Q
/// is restricted to the quasi-momentum sectors of the targets (the rest decouples
/// exactly). λ starts at the lower target diagonal and is driven to a fixed point of
/// λ = lowest eigenvalue of the effective 2×2 (secant-accelerated) until
/// |F(λ) − λ| < 1e−12, at most 100 steps.
/// Throws NearResonanceError when λ meets an eigenvalue of H_QQ.
LowdinResult lowdin_coupling(const HermitianOperator& h_flow, std::size_t first,
                             std::size_t second);

struct PathCouplingResult {
  Complex value{};
  std::size_t path_count = 0;
  std::vector<std::size_t> paths_by_order;  // index = number of intermediate states
};

/// Path series for the coupling between two nodes: every simple path through at most
/// `max_order` intermediate states contributes Π V / Π (λ − ε_intermediate), multiplied
/// by the loop factor of the untouched intermediates reachable from `first`
/// (vertex-disjoint cycles, each entering with −Π V / Π (λ − ε)), with the total number
/// of intermediates on the path and its loops capped at `max_order`. The untruncated
/// series equals the elimination coupling at λ times det(1 − (λ − ε)⁻¹V) over the
/// reachable intermediate block; for four states this is the six-term combined coupling.
PathCouplingResult path_coupling(const CouplingGraph& graph, std::size_t first,
                                 std::size_t second, double lambda, int max_order);

/// Energy of the two single-flow states at the crossing φ = π, dressed by the
/// elimination: mean of the effective 2×2 diagonal.
double degeneracy_energy(const ModelParams& params);

/// Two-level model at phase φ for the ring: V01 and λ from lowdin_coupling on the flow
/// operator at φ, ε from epsilon_of_phi (equal J) or half the bare diagonal splitting of
/// the two single-flow states (unequal J), E0 as given.
TwoLevelModel predict_two_level(const ModelParams& params, double phi, double e0);

}  // namespace ringcat
