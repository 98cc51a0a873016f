#include "ringcat/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "ladder.hpp"
#include "ringcat/errors.hpp"

namespace ringcat {

void ModelParams::validate() const {
  if (n < 1) throw InvalidArgument("particle count N must be >= 1, got " + std::to_string(n));
  for (double j : tunnelling) {
    if (!std::isfinite(j)) throw InvalidArgument("tunnelling strengths must be finite");
  }
  if (!std::isfinite(u) || !std::isfinite(u0) || !std::isfinite(u1) || !std::isfinite(phi)) {
    throw InvalidArgument("interaction strengths and phase must be finite");
  }
}

double hermiticity_defect(const ComplexMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) return INFINITY;
  if (matrix.size() == 0) return 0.0;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(ComplexMatrix matrix, BasisKind kind, ModelParams params,
                                     double tolerance)
    : kind_(kind), params_(params) {
  const double defect = hermiticity_defect(matrix);
  if (!(defect <= tolerance)) {
    throw NumericalContractError("operator is not Hermitian: max |H - H^dagger| = " +
                                 std::to_string(defect));
  }
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

namespace {

using detail::add_term;
using detail::add_term_and_conjugate;

constexpr int kA = 0, kB = 1, kC = 2;
constexpr int kAlpha = 0, kBeta = 1, kGamma = 2;

ComplexMatrix zero_matrix(const FockBasis& basis) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  return ComplexMatrix::Zero(d, d);
}

void add_onsite(ComplexMatrix& h, const FockBasis& basis, double strength) {
  for (int mode = 0; mode < 3; ++mode) add_term(h, basis, strength, {mode, mode}, {mode, mode});
}

}  // namespace

HermitianOperator build_site_hamiltonian(const ModelParams& params) {
  params.validate();
  const FockBasis basis(params.n, BasisKind::site);
  ComplexMatrix h = zero_matrix(basis);

  const Complex peierls = std::polar(1.0, params.phi / 3.0);
  const std::array<std::array<int, 2>, 3> bonds{{{kA, kB}, {kB, kC}, {kC, kA}}};
  for (std::size_t i = 0; i < bonds.size(); ++i) {
    const auto [to, from] = bonds[i];
    add_term_and_conjugate(h, basis, -params.tunnelling[i] * peierls, {to}, {from});
  }

  if (params.interaction == Interaction::contact) {
    add_onsite(h, basis, params.u);
  } else {
    add_onsite(h, basis, params.u0);
    add_term_and_conjugate(h, basis, params.u1, {kA, kA}, {kB, kB});
    add_term_and_conjugate(h, basis, params.u1, {kB, kB}, {kC, kC});
    add_term_and_conjugate(h, basis, params.u1, {kC, kC}, {kA, kA});
  }
  return HermitianOperator(std::move(h), BasisKind::site, params);
}

HermitianOperator build_flow_hamiltonian(const ModelParams& params) {
  params.validate();
  if (!params.equal_tunnelling()) {
    throw UnsupportedConfiguration(
        "closed flow-basis form needs equal tunnelling; use flow_hamiltonian_by_conjugation");
  }
  const FockBasis basis(params.n, BasisKind::flow);
  ComplexMatrix h = zero_matrix(basis);

  const double j = params.tunnelling[0];
  const double c = std::cos(params.phi / 3.0);
  const double s = std::sin(params.phi / 3.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Occupation& o = basis[i];
    const auto idx = static_cast<Eigen::Index>(i);
    h(idx, idx) += -j * ((2.0 * o[0] - o[1] - o[2]) * c + std::sqrt(3.0) * (o[1] - o[2]) * s);
  }

  // Same-mode, density-density and pair-scattering coefficients.
  double same = 0.0, density = 0.0, scatter = 0.0;
  if (params.interaction == Interaction::contact) {
    same = params.u / 3.0;
    density = 4.0 * params.u / 3.0;
    scatter = 2.0 * params.u / 3.0;
  } else {
    same = (params.u0 + params.u1) / 6.0;
    density = (4.0 * params.u0 + params.u1) / 6.0;
    scatter = (2.0 * params.u0 - params.u1) / 6.0;
  }
  add_onsite(h, basis, same);
  add_term(h, basis, density, {kAlpha, kBeta}, {kAlpha, kBeta});
  add_term(h, basis, density, {kAlpha, kGamma}, {kAlpha, kGamma});
  add_term(h, basis, density, {kBeta, kGamma}, {kBeta, kGamma});
  add_term_and_conjugate(h, basis, scatter, {kBeta, kGamma}, {kAlpha, kAlpha});
  add_term_and_conjugate(h, basis, scatter, {kAlpha, kGamma}, {kBeta, kBeta});
  add_term_and_conjugate(h, basis, scatter, {kAlpha, kBeta}, {kGamma, kGamma});
  return HermitianOperator(std::move(h), BasisKind::flow, params);
}

HermitianOperator flow_hamiltonian_by_conjugation(const ModelParams& params) {
  const HermitianOperator site = build_site_hamiltonian(params);
  const ComplexMatrix w = mode_transform_matrix(params.n);
  ComplexMatrix h = w.adjoint() * site.matrix() * w;
  return HermitianOperator(std::move(h), BasisKind::flow, params, 1e-10);
}

HermitianOperator flow_hamiltonian(const ModelParams& params) {
  if (params.equal_tunnelling() && params.interaction == Interaction::contact) {
    return build_flow_hamiltonian(params);
  }
  return flow_hamiltonian_by_conjugation(params);
}

void write_operator(std::ostream& out, const HermitianOperator& op) {
  const auto& m = op.matrix();
  const auto& p = op.params();
  std::size_t nnz = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != Complex{}) ++nnz;

  char line[160];
  out << "%%MatrixMarket matrix coordinate complex general\n";
  std::snprintf(line, sizeof line, "%% basis=%s N=%d J=%.17g,%.17g,%.17g phi=%.17g\n",
                to_string(op.kind()).c_str(), p.n, p.tunnelling[0], p.tunnelling[1],
                p.tunnelling[2], p.phi);
  out << line;
  out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) == Complex{}) continue;
      std::snprintf(line, sizeof line, "%lld %lld %.17g %.17g\n", static_cast<long long>(r + 1),
                    static_cast<long long>(c + 1), m(r, c).real(), m(r, c).imag());
      out << line;
    }
  }
}

}  // namespace ringcat
