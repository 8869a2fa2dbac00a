#include "moduli/blowup.hpp"

namespace moduli {

Poly blowup_correction(const Poly& center, int codim, const Rational& multiplicity) {
    if (codim < 1) throw std::invalid_argument("blowup_correction: codimension must be >= 1");
    return (multiplicity * center) * geom_sum(2, 2 * codim - 2);
}

Poly blowup_poincare(const Poly& ambient, const Poly& center, int codim,
                     const Rational& multiplicity) {
    return ambient + blowup_correction(center, codim, multiplicity);
}

}  // namespace moduli
