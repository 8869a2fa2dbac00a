#pragma once

#include "moduli/poly.hpp"

namespace moduli {

// Additional cohomology contributed by blowing up m disjoint copies of a
// smooth center Y of codimension c inside X:
//   m * P(Y) * (t^2 + t^4 + ... + t^{2c-2}).
// Zero for c = 1, where the blow-up changes nothing.
Poly blowup_correction(const Poly& center, int codim, const Rational& multiplicity);

// P(Bl_Y X) = P(X) + blowup_correction(P(Y), c, m).
Poly blowup_poincare(const Poly& ambient, const Poly& center, int codim,
                     const Rational& multiplicity);

// Blow-up of `multiplicity` disjoint copies of a codimension-`codim` center.
struct BlowupSpec {
    Poly ambient;
    Poly center;
    int codim;
    Rational multiplicity;

    BlowupSpec(Poly ambient_, Poly center_, int codim_, Rational multiplicity_)
        : ambient(std::move(ambient_)), center(std::move(center_)),
          codim(codim_), multiplicity(std::move(multiplicity_)) {
        if (codim < 1) throw std::invalid_argument("BlowupSpec: codimension must be >= 1");
        if (multiplicity.is_negative() || !multiplicity.is_integer())
            throw std::invalid_argument("BlowupSpec: multiplicity must be a nonnegative integer");
    }

    Poly poincare() const { return blowup_poincare(ambient, center, codim, multiplicity); }
};

}  // namespace moduli
