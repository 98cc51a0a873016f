#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ringcat/types.hpp"

namespace ringcat {

/// Which single-particle modes the occupations refer to: sites (a,b,c) or flows (α,β,γ).
enum class BasisKind { site, flow };

std::string to_string(BasisKind kind);

/// Particle counts on the three modes of the ring.
struct Occupation {
  std::array<int, 3> n{0, 0, 0};

  Occupation() = default;
  Occupation(int n1, int n2, int n3) : n{n1, n2, n3} {}

  int& operator[](std::size_t mode) { return n[mode]; }
  int operator[](std::size_t mode) const { return n[mode]; }
  int total() const { return n[0] + n[1] + n[2]; }

  auto operator<=>(const Occupation&) const = default;
};

/// Ket-style label, e.g. "|3,0,0>".
std::string to_string(const Occupation& occ);

/// Total quasi-momentum modulo 3 of a flow-basis occupation. Mode α carries 0,
/// β one clockwise quantum (+1), γ one anticlockwise quantum (−1 ≡ 2).
int quasimomentum_sector(const Occupation& occ);

/// All occupations of N bosons on three modes, in lexicographically descending order,
/// so |N,0,0> has index 0. Immutable after construction.
class FockBasis {
 public:
  FockBasis(int n_particles, BasisKind kind);

  int particles() const { return n_; }
  BasisKind kind() const { return kind_; }
  std::size_t size() const { return states_.size(); }
  const Occupation& operator[](std::size_t i) const { return states_[i]; }
  const std::vector<Occupation>& states() const { return states_; }

  /// Position of `occ` in the enumeration. Throws InvalidArgument when the occupation
  /// is negative anywhere or does not sum to N.
  std::size_t index(const Occupation& occ) const;

 private:
  int n_;
  BasisKind kind_;
  std::vector<Occupation> states_;
};

FockBasis enumerate_fock(int n_particles, BasisKind kind = BasisKind::site);

/// (N+2)(N+1)/2.
std::size_t fock_dimension(int n_particles);

/// Site-basis expansion of (f_k†)^N |0> / sqrt(N!), where f_0 = α, f_1 = β, f_2 = γ.
/// Evaluated from the closed multinomial form; unit norm.
ComplexVector embed_single_flow(int n_particles, int flow_mode);

/// Unitary W with W(site, flow) = <site occupation | flow occupation>. Column j is the
/// site expansion of the j-th flow state of enumerate_fock(N, flow), built by repeated
/// application of the single-particle creation operators.
ComplexMatrix mode_transform_matrix(int n_particles);

}  // namespace ringcat
