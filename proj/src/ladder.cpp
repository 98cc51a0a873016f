#include "ladder.hpp"

#include <cmath>

namespace ringcat::detail {

void add_term(ComplexMatrix& h, const FockBasis& basis, Complex coeff,
              std::initializer_list<int> creators, std::initializer_list<int> annihilators) {
  for (std::size_t in = 0; in < basis.size(); ++in) {
    Occupation occ = basis[in];
    double amp = 1.0;
    // Rightmost annihilator acts first; the order does not change the amplitude.
    for (int mode : annihilators) {
      auto& count = occ[static_cast<std::size_t>(mode)];
      if (count == 0) {
        amp = 0.0;
        break;
      }
      amp *= std::sqrt(static_cast<double>(count));
      --count;
    }
    if (amp == 0.0) continue;
    for (int mode : creators) {
      auto& count = occ[static_cast<std::size_t>(mode)];
      ++count;
      amp *= std::sqrt(static_cast<double>(count));
    }
    const auto out = basis.index(occ);
    h(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) += coeff * amp;
  }
}

void add_term_and_conjugate(ComplexMatrix& h, const FockBasis& basis, Complex coeff,
                            std::initializer_list<int> creators,
                            std::initializer_list<int> annihilators) {
  add_term(h, basis, coeff, creators, annihilators);
  add_term(h, basis, std::conj(coeff), annihilators, creators);
}

}  // namespace ringcat::detail
