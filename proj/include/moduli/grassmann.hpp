#pragma once

#include "moduli/poly.hpp"

namespace moduli {

// A Grassmannian Gr(k, n) of k-planes in an n-dimensional space.
struct GrassmannSpec {
    int k;
    int n;
    GrassmannSpec(int k_, int n_) : k(k_), n(n_) {
        if (k < 1 || k > n) throw std::invalid_argument("GrassmannSpec: need 1 <= k <= n");
    }
    Poly poincare() const;
};

// The t^2-analog binomial coefficient
//   prod_{i=1..k} (1 - t^{2(n-k+i)}) / (1 - t^{2i}),
// computed by iterated exact division (each step is checked exact). This is
// the Poincare polynomial of Gr(k, n).
Poly gaussian_binomial(int n, int k);

// 1 + t^2 + ... + t^{2m}: the Poincare polynomial of m-dimensional projective space.
Poly projective_poincare(int m);

}  // namespace moduli
