#pragma once

#include <initializer_list>

#include "ringcat/basis.hpp"
#include "ringcat/types.hpp"

namespace ringcat::detail {

// h += coeff · c†_{creators...} c_{annihilators...}, operators of one mode normal ordered.
// Mode indices refer to the basis interpretation (sites a,b,c or flows α,β,γ).
void add_term(ComplexMatrix& h, const FockBasis& basis, Complex coeff,
              std::initializer_list<int> creators, std::initializer_list<int> annihilators);

// Same term plus its Hermitian conjugate.
void add_term_and_conjugate(ComplexMatrix& h, const FockBasis& basis, Complex coeff,
                            std::initializer_list<int> creators,
                            std::initializer_list<int> annihilators);

}  // namespace ringcat::detail
