#include "ringcat/loop_model.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "ringcat/errors.hpp"

namespace ringcat::loop {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double LoopParams::energy_scale() const {
  const double q = kTwoPi / length;
  return hbar * hbar / (2.0 * mass) * q * q;
}

void LoopParams::validate() const {
  if (!(length > 0.0)) throw InvalidArgument("loop circumference L must be positive");
  if (!(mass > 0.0) || !(hbar > 0.0)) throw InvalidArgument("hbar and mass must be positive");
}

double loop_single_energy(int k, double phi, const LoopParams& params) {
  const double shift = k - phi / kTwoPi;
  return params.energy_scale() * shift * shift;
}

double applied_phase_velocity(double phi, const LoopParams& params) {
  return params.hbar / params.mass * (phi / params.length);
}

double single_flow_energy_n(int n_particles, int k, double phi, const LoopParams& params) {
  if (n_particles < 1) throw InvalidArgument("single_flow_energy_n needs N >= 1");
  return n_particles * loop_single_energy(k, phi, params);
}

RealVector loop_spectrum_with_barrier(double phi, const LoopParams& params, int k_max,
                                      int n_levels) {
  params.validate();
  if (n_levels < 1 || k_max < n_levels) {
    throw InvalidArgument("loop_spectrum_with_barrier requires 1 <= n_levels <= k_max");
  }
  const int dim = 2 * k_max + 1;
  const double coupling = params.barrier / params.length;
  const double x0 = params.barrier_position();
  ComplexMatrix h(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const int k = r - k_max;
    for (int c = 0; c < dim; ++c) {
      const int kp = c - k_max;
      h(r, c) = r == c ? Complex(loop_single_energy(k, phi, params), 0.0)
                       : std::polar(coupling, (kp - k) * kTwoPi * x0 / params.length);
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().head(n_levels);
}

double delta_interaction_expectation(const std::vector<int>& flows, double v) {
  const auto n = static_cast<double>(flows.size());
  if (flows.size() < 2) return 0.0;
  std::map<int, int> counts;
  for (int k : flows) ++counts[k];
  double same = 0.0;
  for (const auto& [k, c] : counts) same += 0.5 * c * (c - 1);
  return v * (n * (n - 1.0) - same);
}

namespace {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss–Legendre nodes on [0, L] by Newton iteration on P_n.
GaussRule gauss_legendre(int order, double length) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * length * (x + 1.0);
    rule.weights[static_cast<std::size_t>(i)] = length / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

CouplingEstimate coupling_v01(int n_particles, double v, const LoopParams& params) {
  params.validate();
  if (n_particles < 2) throw InvalidArgument("coupling_v01 needs N >= 2");
  const double n = n_particles;
  const double length = params.length;

  CouplingEstimate est;
  est.analytic = v * (n / 2.0) * ((n - 1.0) / (2.0 * length)) / std::pow(kTwoPi, n - 1.0);
  if (n_particles > 4) return est;

  // δ(x1 − x2) fixes x2 = x1; the remaining N−1 coordinates are integrated on a
  // tensor Gauss–Legendre grid. Integrand: conj(ψ1) ψ0 with ψ1's exponent i2πΣx/L.
  const GaussRule rule = gauss_legendre(32, length);
  const int dims = n_particles - 1;
  const std::size_t points = rule.nodes.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(dims), 0);
  Complex integral{};
  while (true) {
    double weight = 1.0;
    double phase_sum = 0.0;
    for (int d = 0; d < dims; ++d) {
      const double x = rule.nodes[idx[static_cast<std::size_t>(d)]];
      weight *= rule.weights[idx[static_cast<std::size_t>(d)]];
      phase_sum += (d == 0 ? 2.0 : 1.0) * x;  // the first coordinate carries x1 = x2
    }
    integral += weight * std::polar(1.0, -kTwoPi * phase_sum / length);
    int d = 0;
    while (d < dims && ++idx[static_cast<std::size_t>(d)] == points) {
      idx[static_cast<std::size_t>(d)] = 0;
      ++d;
    }
    if (d == dims) break;
  }
  const double prefactor = v / std::pow(length, n) * (n / 2.0) * (n - 1.0);
  est.quadrature = prefactor * integral;
  est.oracle_available = true;
  est.discrepant = std::abs(est.analytic - std::abs(*est.quadrature)) >
                   1e-6 * std::max(est.analytic, 1e-300);
  return est;
}

}  // namespace ringcat::loop
