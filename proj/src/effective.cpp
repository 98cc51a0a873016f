#include "ringcat/effective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "ringcat/errors.hpp"

namespace ringcat {

TwoLevelModel two_level_predict(double e0, double eps, Complex v01) {
  TwoLevelModel m;
  m.e0 = e0;
  m.eps = eps;
  m.v01 = v01;
  const double coupling = std::abs(v01);
  const double root = std::hypot(eps, coupling);
  m.e_minus = e0 - root;
  m.e_plus = e0 + root;
  if (root == 0.0) {
    m.indeterminate = true;
    m.predicted_ratio = Complex(std::numeric_limits<double>::quiet_NaN(),
                                std::numeric_limits<double>::quiet_NaN());
    return m;
  }
  if (eps >= 0.0) {
    m.predicted_ratio = -v01 / (eps + root);
  } else if (coupling == 0.0) {
    m.predicted_ratio = Complex(std::numeric_limits<double>::infinity(), 0.0);
  } else {
    // (ε + r)(r − ε) = |V|², avoids the cancellation in ε + r for ε < 0.
    m.predicted_ratio = -(root - eps) / std::conj(v01);
  }
  return m;
}

double epsilon_of_phi(const ModelParams& params, double phi) {
  if (!params.equal_tunnelling()) {
    throw UnsupportedConfiguration("epsilon_of_phi is defined for equal tunnelling only");
  }
  const double jn = params.tunnelling[0] * params.n;
  return jn - 2.0 * jn * std::cos(phi / 3.0);
}

CouplingGraph::CouplingGraph(const HermitianOperator& h_flow)
    : basis_(h_flow.params().n, BasisKind::flow) {
  if (h_flow.kind() != BasisKind::flow) {
    throw InvalidArgument("coupling graph needs a flow-basis operator");
  }
  const auto& m = h_flow.matrix();
  nodes_ = basis_.states();
  energies_.resize(nodes_.size());
  adjacency_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    energies_[i] = m(r, r).real();
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      if (i == j) continue;
      const Complex v = m(r, static_cast<Eigen::Index>(j));
      if (std::abs(v) > kEdgeThreshold) adjacency_[i].push_back({j, v});
    }
  }
}

std::size_t CouplingGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& e : adjacency_) total += e.size();
  return total;
}

bool CouplingGraph::connected(std::size_t from, std::size_t to) const {
  std::vector<char> seen(size(), 0);
  std::queue<std::size_t> frontier;
  frontier.push(from);
  seen[from] = 1;
  while (!frontier.empty()) {
    const auto at = frontier.front();
    frontier.pop();
    if (at == to) return true;
    for (const auto& e : adjacency_[at]) {
      if (!seen[e.to]) {
        seen[e.to] = 1;
        frontier.push(e.to);
      }
    }
  }
  return false;
}

CouplingGraph build_coupling_graph(const HermitianOperator& h_flow) {
  return CouplingGraph(h_flow);
}

LowdinResult lowdin_coupling(const HermitianOperator& h_flow, std::size_t first,
                             std::size_t second) {
  if (h_flow.kind() != BasisKind::flow) {
    throw InvalidArgument("lowdin_coupling needs a flow-basis operator");
  }
  const auto dim = static_cast<std::size_t>(h_flow.dimension());
  if (first >= dim || second >= dim || first == second) {
    throw InvalidArgument("lowdin_coupling: target indices must be distinct and in range");
  }
  const FockBasis basis = h_flow.basis();
  const auto& h = h_flow.matrix();

  const bool sector_restricted = h_flow.params().equal_tunnelling();
  const int sector_a = quasimomentum_sector(basis[first]);
  const int sector_b = quasimomentum_sector(basis[second]);
  std::vector<Eigen::Index> q;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i == first || i == second) continue;
    const int s = quasimomentum_sector(basis[i]);
    if (!sector_restricted || s == sector_a || s == sector_b) q.push_back(static_cast<Eigen::Index>(i));
  }
  const std::array<Eigen::Index, 2> p{static_cast<Eigen::Index>(first),
                                      static_cast<Eigen::Index>(second)};

  ComplexMatrix h_pp(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) h_pp(r, c) = h(p[r], p[c]);

  const auto nq = static_cast<Eigen::Index>(q.size());
  ComplexMatrix h_pq(2, nq);
  ComplexMatrix h_qq(nq, nq);
  for (Eigen::Index a = 0; a < nq; ++a) {
    for (int r = 0; r < 2; ++r) h_pq(r, a) = h(p[r], q[a]);
    for (Eigen::Index b = 0; b < nq; ++b) h_qq(a, b) = h(q[a], q[b]);
  }

  // (λ − H_QQ)⁻¹ = U diag(1/(λ − e)) U†, so only one decomposition is needed.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> q_solver;
  ComplexMatrix projected;  // U† H_QP
  if (nq > 0) {
    q_solver.compute(h_qq);
    projected = q_solver.eigenvectors().adjoint() * h_pq.adjoint();
  }
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());

  auto effective_at = [&](double lambda) {
    ComplexMatrix heff = h_pp;
    if (nq == 0) return heff;
    const auto& e = q_solver.eigenvalues();
    Eigen::VectorXcd inv(nq);
    for (Eigen::Index k = 0; k < nq; ++k) {
      const double gap = lambda - e[k];
      if (std::abs(gap) < 1e-12 * scale) {
        Eigen::Index dominant = 0;
        q_solver.eigenvectors().col(k).cwiseAbs().maxCoeff(&dominant);
        const auto& state = basis[static_cast<std::size_t>(q[dominant])];
        throw NearResonanceError("lowdin_coupling: lambda = " + std::to_string(lambda) +
                                     " is resonant with an eliminated level dominated by " +
                                     to_string(state),
                                 to_string(state));
      }
      inv[k] = 1.0 / gap;
    }
    heff += projected.adjoint() * inv.asDiagonal() * projected;
    return heff;
  };
  auto lowest = [](const ComplexMatrix& m2) {
    return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m2, Eigen::EigenvaluesOnly)
        .eigenvalues()[0];
  };

  LowdinResult result;
  result.eliminated = q.size();
  // Fixed point λ = F(λ), F = lowest eigenvalue of the effective 2×2. Plain iteration
  // oscillates once F' approaches −1 (an eliminated level below the targets), so steps
  // after the first are secant steps on F(λ) − λ, falling back to λ ← F(λ).
  double lambda = std::min(h_pp(0, 0).real(), h_pp(1, 1).real());
  double f_value = lowest(effective_at(lambda));
  double prev_lambda = lambda, prev_residual = f_value - lambda;
  bool converged = false;
  for (int it = 1; it <= 100; ++it) {
    const double residual = f_value - lambda;
    result.iterations = it;
    if (std::abs(residual) < 1e-12) {
      converged = true;
      break;
    }
    double next = f_value;
    if (it > 1 && residual != prev_residual) {
      const double secant = lambda - residual * (lambda - prev_lambda) / (residual - prev_residual);
      if (std::isfinite(secant)) next = secant;
    }
    prev_lambda = lambda;
    prev_residual = residual;
    lambda = next;
    f_value = lowest(effective_at(lambda));
  }
  if (!converged) {
    throw NumericalContractError("lowdin_coupling: lambda self-consistency did not converge");
  }
  result.lambda = lambda;
  result.effective = effective_at(lambda);
  result.v01 = result.effective(0, 1);
  return result;
}

namespace {

class PathSeries {
 public:
  PathSeries(const CouplingGraph& graph, std::size_t first, std::size_t second, double lambda,
             int max_order)
      : graph_(graph),
        first_(first),
        second_(second),
        max_order_(max_order),
        on_path_(graph.size(), 0),
        outside_(graph.size(), 1),
        inverse_gap_(graph.size()) {
    // Cycles in components the targets never reach would only rescale the result.
    std::vector<std::size_t> stack{first};
    outside_[first] = 0;
    while (!stack.empty()) {
      const std::size_t at = stack.back();
      stack.pop_back();
      for (const auto& e : graph.edges(at)) {
        if (outside_[e.to]) {
          outside_[e.to] = 0;
          stack.push_back(e.to);
        }
      }
    }
    for (std::size_t i = 0; i < graph.size(); ++i) inverse_gap_[i] = 1.0 / (lambda - graph.energy(i));
    result_.paths_by_order.assign(static_cast<std::size_t>(max_order) + 1, 0);
  }

  PathCouplingResult run() {
    on_path_[first_] = 1;
    extend(first_, Complex(1.0, 0.0), 0);
    return result_;
  }

 private:
  bool eliminable(std::size_t i) const { return i != first_ && i != second_ && !on_path_[i]; }

  void extend(std::size_t at, Complex weight, int intermediates) {
    for (const auto& e : graph_.edges(at)) {
      if (e.to == second_) {
        const Complex loops = loop_factor(max_order_ - intermediates);
        result_.value += weight * e.value * loops;
        ++result_.path_count;
        ++result_.paths_by_order[static_cast<std::size_t>(intermediates)];
        continue;
      }
      if (!eliminable(e.to) || intermediates == max_order_) continue;
      on_path_[e.to] = 1;
      extend(e.to, weight * e.value * inverse_gap_[e.to], intermediates + 1);
      on_path_[e.to] = 0;
    }
  }

  // Σ over sets of vertex-disjoint cycles among the free intermediates, each cycle
  // contributing −Π V/(λ − ε), with at most `budget` vertices in total.
  Complex loop_factor(int budget) {
    if (budget < 2) return 1.0;
    std::vector<char> blocked = outside_;
    for (std::size_t i = 0; i < blocked.size(); ++i) blocked[i] |= on_path_[i];
    blocked[first_] = blocked[second_] = 1;
    return cycle_sets(blocked, 0, budget);
  }

  Complex cycle_sets(std::vector<char>& blocked, std::size_t start, int budget) {
    if (budget < 2) return 1.0;
    std::size_t lead = start;
    while (lead < graph_.size() && blocked[lead]) ++lead;
    if (lead >= graph_.size()) return 1.0;

    // `lead` stays uncovered.
    blocked[lead] = 1;
    Complex total = cycle_sets(blocked, lead + 1, budget);
    blocked[lead] = 0;

    // `lead` is the smallest vertex of one cycle.
    std::vector<std::size_t> cycle{lead};
    blocked[lead] = 1;
    grow_cycle(blocked, cycle, lead, Complex(inverse_gap_[lead]), budget, total);
    blocked[lead] = 0;
    return total;
  }

  void grow_cycle(std::vector<char>& blocked, std::vector<std::size_t>& cycle, std::size_t at,
                  Complex weight, int budget, Complex& total) {
    const std::size_t lead = cycle.front();
    for (const auto& e : graph_.edges(at)) {
      if (e.to == lead && cycle.size() >= 2) {
        total -= weight * e.value *
                 cycle_sets(blocked, lead + 1, budget - static_cast<int>(cycle.size()));
        continue;
      }
      if (e.to <= lead || blocked[e.to] || static_cast<int>(cycle.size()) >= budget) continue;
      blocked[e.to] = 1;
      cycle.push_back(e.to);
      grow_cycle(blocked, cycle, e.to, weight * e.value * inverse_gap_[e.to], budget, total);
      cycle.pop_back();
      blocked[e.to] = 0;
    }
  }

  const CouplingGraph& graph_;
  std::size_t first_;
  std::size_t second_;
  int max_order_;
  std::vector<char> on_path_;
  std::vector<char> outside_;
  std::vector<double> inverse_gap_;
  PathCouplingResult result_;
};

}  // namespace

PathCouplingResult path_coupling(const CouplingGraph& graph, std::size_t first,
                                 std::size_t second, double lambda, int max_order) {
  if (max_order < 1) throw InvalidArgument("path_coupling: max_order must be >= 1");
  if (first >= graph.size() || second >= graph.size() || first == second) {
    throw InvalidArgument("path_coupling: target indices must be distinct and in range");
  }
  return PathSeries(graph, first, second, lambda, max_order).run();
}

namespace {

std::array<std::size_t, 2> single_flow_targets(const FockBasis& basis) {
  const int n = basis.particles();
  return {basis.index({n, 0, 0}), basis.index({0, n, 0})};
}

}  // namespace

double degeneracy_energy(const ModelParams& params) {
  const auto h = flow_hamiltonian(params.with_phi(std::numbers::pi));
  const auto [t0, t1] = single_flow_targets(h.basis());
  const auto low = lowdin_coupling(h, t0, t1);
  return 0.5 * (low.effective(0, 0).real() + low.effective(1, 1).real());
}

TwoLevelModel predict_two_level(const ModelParams& params, double phi, double e0) {
  const auto h = flow_hamiltonian(params.with_phi(phi));
  const auto [t0, t1] = single_flow_targets(h.basis());
  const auto low = lowdin_coupling(h, t0, t1);
  const auto i0 = static_cast<Eigen::Index>(t0);
  const auto i1 = static_cast<Eigen::Index>(t1);
  const double eps = params.equal_tunnelling()
                         ? epsilon_of_phi(params, phi)
                         : 0.5 * (h(i0, i0).real() - h(i1, i1).real());
  TwoLevelModel model = two_level_predict(e0, eps, low.v01);
  model.lambda = low.lambda;
  return model;
}

}  // namespace ringcat
