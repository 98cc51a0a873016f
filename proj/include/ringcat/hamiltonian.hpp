#pragma once

#include <array>
#include <iosfwd>
#include <numbers>

#include "ringcat/basis.hpp"
#include "ringcat/types.hpp"

namespace ringcat {

/// Which interaction term the ring carries.
enum class Interaction {
  contact,  ///< U Σ n_i(n_i − 1)
  dipolar,  ///< U0 Σ n_i(n_i − 1) + U1 pair-exchange on nearest-neighbour bonds
};

/// Inputs of the three-site twisted Bose-Hubbard ring. `tunnelling[0]` is the a–b bond,
/// `tunnelling[1]` b–c and `tunnelling[2]` c–a; `phi` is the total applied phase, each
/// clockwise hop picks up e^{iφ/3}.
struct ModelParams {
  int n = 3;
  std::array<double, 3> tunnelling{1.0, 1.0, 1.0};
  Interaction interaction = Interaction::contact;
  double u = 0.1;
  double u0 = 0.0;
  double u1 = 0.0;
  double phi = std::numbers::pi;

  bool equal_tunnelling() const {
    return tunnelling[0] == tunnelling[1] && tunnelling[1] == tunnelling[2];
  }
  /// Throws InvalidArgument for N < 1 or non-finite couplings.
  void validate() const;

  ModelParams with_phi(double new_phi) const {
    ModelParams p = *this;
    p.phi = new_phi;
    return p;
  }
};

/// Dense Hermitian matrix tied to the basis it was built in.
class HermitianOperator {
 public:
  /// Checks ‖H − H†‖_max ≤ tolerance (NumericalContractError otherwise) and stores the
  /// exactly Hermitian part.
  HermitianOperator(ComplexMatrix matrix, BasisKind kind, ModelParams params,
                    double tolerance = 1e-12);

  Eigen::Index dimension() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const { return matrix_(row, col); }
  BasisKind kind() const { return kind_; }
  const ModelParams& params() const { return params_; }
  FockBasis basis() const { return FockBasis(params_.n, kind_); }

 private:
  ComplexMatrix matrix_;
  BasisKind kind_;
  ModelParams params_;
};

/// Largest entrywise |H − H†|.
double hermiticity_defect(const ComplexMatrix& matrix);

/// The twisted Hamiltonian in the site-Fock basis:
///   −Σ_bonds J_i (e^{iφ/3} a_i† a_{i+1} + h.c.) + interaction.
/// Contact: U Σ a†²a². Dipolar: U0 Σ a†²a² + U1 ((a†)²b² + (b†)²c² + (c†)²a² + h.c.).
HermitianOperator build_site_hamiltonian(const ModelParams& params);

/// Closed flow-basis form for equal tunnelling: single-particle diagonal plus the
/// momentum-conserving interaction (U/3){…}. For dipolar parameters this is the printed
/// (U0 ± U1)/6 form taken verbatim, kept as a comparison target; see
/// flow_hamiltonian_by_conjugation for the operator that is unitarily equivalent to the
/// site Hamiltonian. Throws UnsupportedConfiguration when the J_i differ.
HermitianOperator build_flow_hamiltonian(const ModelParams& params);

/// W† H_site W with W = mode_transform_matrix(N). Valid for any parameters.
HermitianOperator flow_hamiltonian_by_conjugation(const ModelParams& params);

/// Analytic flow form when it is exact (equal J, contact), otherwise the conjugated one.
HermitianOperator flow_hamiltonian(const ModelParams& params);

/// Matrix-market-style dump: header, `dim dim nnz`, then one `row col re im` line per
/// nonzero entry (1-based, 17 significant digits).
void write_operator(std::ostream& out, const HermitianOperator& op);

}  // namespace ringcat
