#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

Series zeros(int n) { return Series(static_cast<size_t>(n) + 1, mpq_class(0)); }

Series one(int n) {
    Series s = zeros(n);
    s[0] = 1;
    return s;
}

Series monomial(int k, int n) {
    Series s = zeros(n);
    if (k <= n) s[static_cast<size_t>(k)] = 1;
    return s;
}

Series add(const Series& a, const Series& b) {
    Series s = a;
    for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return s;
}

Series sub(const Series& a, const Series& b) {
    Series s = a;
    for (size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
    return s;
}

Series mul(const Series& a, const Series& b) {
    Series s = zeros(static_cast<int>(a.size()) - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < s.size(); ++j) s[i + j] += a[i] * b[j];
    }
    return s;
}

Series scale(const mpq_class& c, const Series& a) {
    Series s = a;
    for (auto& x : s) x *= c;
    return s;
}

Series shift(const Series& a, int k) {
    Series s = zeros(static_cast<int>(a.size()) - 1);
    for (size_t i = static_cast<size_t>(k); i < s.size(); ++i) s[i] = a[i - static_cast<size_t>(k)];
    return s;
}

Series inv_one_minus_t2(int n) {
    Series s = zeros(n);
    for (int k = 0; k <= n; k += 2) s[static_cast<size_t>(k)] = 1;
    return s;
}

Series inv_one_minus_t4(int n) {
    Series s = zeros(n);
    for (int k = 0; k <= n; k += 4) s[static_cast<size_t>(k)] = 1;
    return s;
}

Series inv_one_plus_t2(int n) {
    Series s = zeros(n);
    int sign = 1;
    for (int k = 0; k <= n; k += 2, sign = -sign) s[static_cast<size_t>(k)] = sign;
    return s;
}

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class two_pow(int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

Series pow_one_plus_t(int e, int n) {
    Series s = zeros(n);
    for (int k = 0; k <= e && k <= n; ++k) s[static_cast<size_t>(k)] = binomial(e, k);
    return s;
}

Series pow_one_minus_t(int e, int n) {
    Series s = zeros(n);
    for (int k = 0; k <= e && k <= n; ++k)
        s[static_cast<size_t>(k)] = (k % 2 == 0) ? mpq_class(binomial(e, k)) : mpq_class(-binomial(e, k));
    return s;
}

Series pow_one_plus_t3(int e, int n) {
    Series s = zeros(n);
    for (int k = 0; k <= e && 3 * k <= n; ++k) s[static_cast<size_t>(3 * k)] = binomial(e, k);
    return s;
}

Series even_range(int lo, int hi, int n) {
    Series s = zeros(n);
    for (int k = lo; k <= hi && k <= n; k += 2) s[static_cast<size_t>(k)] = 1;
    return s;
}

Series m2_series(int g, int n) {
    if (g < 3) throw std::invalid_argument("oracle::m2_series: genus must be >= 3");
    const mpq_class half(1, 2);
    const mpq_class big(two_pow(2 * g));
    const Series i2 = inv_one_minus_t2(n);
    const Series i4 = inv_one_minus_t4(n);
    const Series ip2 = inv_one_plus_t2(n);
    const Series bp = pow_one_plus_t(2 * g, n);
    const Series bm = pow_one_minus_t(2 * g, n);

    // ((1+t^3)^{2g} - t^{2g+2} (1+t)^{2g}) / ((1-t^2)(1-t^4))
    Series line1 = mul(mul(sub(pow_one_plus_t3(2 * g, n), shift(bp, 2 * g + 2)), i2), i4);

    // 2^{2g} [ (t^2+...+t^{6g-2})/(1-t^4) - t^{4g-2}(1+t^2+...+t^{2g-2})/(1-t^2) ]
    Series line2 = scale(big, sub(mul(even_range(2, 6 * g - 2, n), i4),
                                  shift(mul(even_range(0, 2 * g - 2, n), i2), 4 * g - 2)));

    // (t^2+...+t^{4g-6}) [ (1/2)(1+t)^{2g}/(1-t^2) + (1/2)(1-t)^{2g}/(1+t^2)
    //                      + 2^{2g} (t^2+...+t^{2g-2})/(1-t^4) ]
    Series bracket = add(add(scale(half, mul(bp, i2)), scale(half, mul(bm, ip2))),
                         scale(big, mul(even_range(2, 2 * g - 2, n), i4)));
    Series line3 = mul(even_range(2, 4 * g - 6, n), bracket);

    // - t^{2g-2} (1+t^2+...+t^{2g-4})/(1-t^2) [ (1+t)^{2g} + 2^{2g}(t^2+...+t^{2g-2}) ]
    Series line4 = mul(shift(mul(even_range(0, 2 * g - 4, n), i2), 2 * g - 2),
                       add(bp, scale(big, even_range(2, 2 * g - 2, n))));

    return sub(add(add(line1, line2), line3), line4);
}

Series n_closed_series(int g, int n) {
    if (g < 3) throw std::invalid_argument("oracle::n_closed_series: genus must be >= 3");
    const mpq_class half(1, 2);
    const mpq_class big(two_pow(2 * g));
    const Series i2 = inv_one_minus_t2(n);
    const Series i4 = inv_one_minus_t4(n);
    const Series ip2 = inv_one_plus_t2(n);
    const Series bp = pow_one_plus_t(2 * g, n);
    const Series bm = pow_one_minus_t(2 * g, n);
    const Series one_plus_t4 = add(one(n), monomial(4, n));

    // (1+t^3)^{2g} / ((1-t^2)(1-t^4))
    Series term1 = mul(mul(pow_one_plus_t3(2 * g, n), i2), i4);

    // - t^{2g-2} (1+t^2+t^4) (1+t)^{2g} / ((1-t^2)(1-t^4))
    Series term2 = scale(-1, shift(mul(mul(mul(even_range(0, 4, n), bp), i2), i4), 2 * g - 2));

    // (t^2 / (2(1-t^2))) [ (1+t^{4g-6})(1+t)^{2g}/(1-t^2) + (1-t^{4g-6})(1-t)^{2g}/(1+t^2) ]
    Series term3 = scale(half,
        shift(mul(i2, add(mul(mul(add(one(n), monomial(4 * g - 6, n)), bp), i2),
                          mul(mul(sub(one(n), monomial(4 * g - 6, n)), bm), ip2))), 2));

    // 2^{2g} [ t^2 (1-t^{6g-6})(1+t^4) / ((1-t^2)^2 (1-t^4))
    //          - t^{2g-2} (1-t^6)(1-t^{2g-2})(1+t^4) / ((1-t^2)^3 (1-t^4)) ]
    Series piece1 = shift(mul(mul(mul(sub(one(n), monomial(6 * g - 6, n)), one_plus_t4), mul(i2, i2)), i4), 2);
    Series piece2 = shift(mul(mul(mul(mul(sub(one(n), monomial(6, n)), sub(one(n), monomial(2 * g - 2, n))),
                                      one_plus_t4), mul(mul(i2, i2), i2)), i4), 2 * g - 2);
    Series term4 = scale(big, sub(piece1, piece2));

    return add(add(term1, term2), add(term3, term4));
}

}  // namespace oracle
