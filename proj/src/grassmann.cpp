#include "moduli/grassmann.hpp"

namespace moduli {

Poly gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    Poly result = Poly::one();
    for (int i = 1; i <= k; ++i) {
        // (1 - t^{2(n-k+i)}) and (1 - t^{2i})
        Poly top = Poly::one() - Poly::monomial(2 * (n - k + i));
        Poly bot = Poly::one() - Poly::monomial(2 * i);
        result = Poly::div_exact(result * top, bot);
    }
    return result;
}

Poly projective_poincare(int m) {
    if (m < 0) throw std::invalid_argument("projective_poincare: negative dimension");
    return geom_sum(0, 2 * m);
}

Poly GrassmannSpec::poincare() const { return gaussian_binomial(n, k); }

}  // namespace moduli
