#include "ringcat/basis.hpp"

#include <cmath>
#include <numbers>

#include "ringcat/errors.hpp"

namespace ringcat {

std::string to_string(BasisKind kind) { return kind == BasisKind::site ? "site" : "flow"; }

std::string to_string(const Occupation& occ) {
  return "|" + std::to_string(occ[0]) + "," + std::to_string(occ[1]) + "," +
         std::to_string(occ[2]) + ">";
}

int quasimomentum_sector(const Occupation& occ) { return (occ[1] + 2 * occ[2]) % 3; }

std::size_t fock_dimension(int n_particles) {
  const auto n = static_cast<std::size_t>(n_particles);
  return (n + 2) * (n + 1) / 2;
}

FockBasis::FockBasis(int n_particles, BasisKind kind) : n_(n_particles), kind_(kind) {
  if (n_particles < 0) {
    throw InvalidArgument("FockBasis: particle count must be non-negative, got " +
                          std::to_string(n_particles));
  }
  states_.reserve(fock_dimension(n_particles));
  for (int n1 = n_particles; n1 >= 0; --n1) {
    for (int n2 = n_particles - n1; n2 >= 0; --n2) {
      states_.emplace_back(n1, n2, n_particles - n1 - n2);
    }
  }
}

std::size_t FockBasis::index(const Occupation& occ) const {
  if (occ[0] < 0 || occ[1] < 0 || occ[2] < 0 || occ.total() != n_) {
    throw InvalidArgument("invalid occupation " + to_string(occ) + " for N=" +
                          std::to_string(n_));
  }
  // Block of fixed n1 starts after all blocks with larger n1.
  const auto rest = static_cast<std::size_t>(n_ - occ[0]);
  return rest * (rest + 1) / 2 + (rest - static_cast<std::size_t>(occ[1]));
}

FockBasis enumerate_fock(int n_particles, BasisKind kind) { return FockBasis(n_particles, kind); }

namespace {

constexpr double kTwoPiOver3 = 2.0 * std::numbers::pi / 3.0;

// Phase picked up by a site creation operator inside f_k†: f_k† = Σ_j e^{-i2πkj/3} a_j† / √3.
Complex creation_phase(int flow_mode, int site) {
  return std::polar(1.0, -kTwoPiOver3 * static_cast<double>((flow_mode * site) % 3));
}

void check_mode(int flow_mode) {
  if (flow_mode < 0 || flow_mode > 2) {
    throw InvalidArgument("flow mode must be 0, 1 or 2, got " + std::to_string(flow_mode));
  }
}

// Applies f_k† to a vector over the (N-1)-particle site basis.
ComplexVector apply_flow_creation(int flow_mode, const ComplexVector& in, const FockBasis& from,
                                  const FockBasis& to) {
  ComplexVector out = ComplexVector::Zero(static_cast<Eigen::Index>(to.size()));
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Complex amp = in[static_cast<Eigen::Index>(i)];
    if (amp == Complex{}) continue;
    for (int site = 0; site < 3; ++site) {
      Occupation next = from[i];
      next[static_cast<std::size_t>(site)] += 1;
      const double bosonic = std::sqrt(static_cast<double>(next[static_cast<std::size_t>(site)]));
      out[static_cast<Eigen::Index>(to.index(next))] +=
          amp * bosonic * inv_sqrt3 * creation_phase(flow_mode, site);
    }
  }
  return out;
}

}  // namespace

ComplexVector embed_single_flow(int n_particles, int flow_mode) {
  check_mode(flow_mode);
  if (n_particles < 1) {
    throw InvalidArgument("embed_single_flow requires N >= 1, got " + std::to_string(n_particles));
  }
  const FockBasis basis(n_particles, BasisKind::site);
  ComplexVector v(static_cast<Eigen::Index>(basis.size()));
  const double log_n_fact = std::lgamma(n_particles + 1.0);
  const double log_norm = -0.5 * n_particles * std::log(3.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Occupation& s = basis[i];
    const double log_multinomial = log_n_fact - std::lgamma(s[0] + 1.0) -
                                   std::lgamma(s[1] + 1.0) - std::lgamma(s[2] + 1.0);
    const double magnitude = std::exp(0.5 * log_multinomial + log_norm);
    const int winding = (flow_mode * (s[1] + 2 * s[2])) % 3;
    v[static_cast<Eigen::Index>(i)] = std::polar(magnitude, -kTwoPiOver3 * winding);
  }
  return v;
}

ComplexMatrix mode_transform_matrix(int n_particles) {
  const FockBasis flow(n_particles, BasisKind::flow);
  std::vector<FockBasis> site_bases;
  site_bases.reserve(static_cast<std::size_t>(n_particles) + 1);
  for (int m = 0; m <= n_particles; ++m) site_bases.emplace_back(m, BasisKind::site);

  const auto dim = static_cast<Eigen::Index>(flow.size());
  ComplexMatrix w(dim, dim);
  for (std::size_t col = 0; col < flow.size(); ++col) {
    ComplexVector v = ComplexVector::Ones(1);  // vacuum
    int built = 0;
    double factorials = 1.0;
    for (int mode = 0; mode < 3; ++mode) {
      for (int c = 0; c < flow[col][static_cast<std::size_t>(mode)]; ++c) {
        v = apply_flow_creation(mode, v, site_bases[static_cast<std::size_t>(built)],
                                site_bases[static_cast<std::size_t>(built) + 1]);
        ++built;
        factorials *= static_cast<double>(c + 1);
      }
    }
    w.col(static_cast<Eigen::Index>(col)) = v / std::sqrt(factorials);
  }
  return w;
}

}  // namespace ringcat
