#include "moduli/pipeline.hpp"

#include "moduli/blowup.hpp"
#include "moduli/grassmann.hpp"

namespace moduli {

namespace {

Poly one_minus(int k) { return Poly::one() - Poly::monomial(k); }
Poly one_plus(int k) { return Poly::one() + Poly::monomial(k); }

// (1+t)^{2g}, (1-t)^{2g}, (1+t^3)^{2g}
Poly binom_plus(int g) { return one_plus(1).pow(static_cast<unsigned>(2 * g)); }
Poly binom_minus(int g) { return one_minus(1).pow(static_cast<unsigned>(2 * g)); }
Poly binom_cubes(int g) { return one_plus(3).pow(static_cast<unsigned>(2 * g)); }

Rational two_pow_2g(int g) { return Rational::pow2(static_cast<unsigned long>(2 * g)); }

}  // namespace

std::string space_name(Space s) {
    switch (s) {
        case Space::M2: return "m2";
        case Space::K: return "k";
        case Space::N: return "n";
    }
    throw std::logic_error("space_name: bad enum");
}

Space space_from_name(const std::string& s) {
    if (s == "m2") return Space::M2;
    if (s == "k") return Space::K;
    if (s == "n") return Space::N;
    throw std::invalid_argument("unknown space '" + s + "' (expected m2, k or n)");
}

RatFunc rss_ratfunc(int g) {
    Poly num = binom_cubes(g) - binom_plus(g).shifted(2 * g + 2);
    return RatFunc(num, one_minus(2) * one_minus(4));
}

RatFunc r1_correction_ratfunc(int g) {
    RatFunc a(geom_sum(2, 6 * g - 2), one_minus(4));
    RatFunc b(projective_poincare(g - 1).shifted(4 * g - 2), one_minus(2));
    return two_pow_2g(g) * (a - b);
}

RatFunc r2_correction_ratfunc(int g) {
    const Rational half(1, 2);
    RatFunc bracket = half * RatFunc(binom_plus(g), one_minus(2)) +
                      half * RatFunc(binom_minus(g), one_plus(2)) +
                      two_pow_2g(g) * RatFunc(geom_sum(2, 2 * g - 2), one_minus(4));
    RatFunc added = RatFunc(geom_sum(2, 4 * g - 6)) * bracket;

    RatFunc removed = RatFunc(projective_poincare(g - 2).shifted(2 * g - 2), one_minus(2)) *
                      RatFunc(binom_plus(g) + two_pow_2g(g) * geom_sum(2, 2 * g - 2));
    return added - removed;
}

SeriesTrunc pg_rss(const GenusConfig& cfg) {
    return SeriesTrunc::expand(rss_ratfunc(cfg.genus), cfg.degree_bound);
}

SeriesTrunc pg_r1(const GenusConfig& cfg) {
    return pg_rss(cfg) + SeriesTrunc::expand(r1_correction_ratfunc(cfg.genus), cfg.degree_bound);
}

SeriesTrunc pg_r2(const GenusConfig& cfg) {
    return pg_r1(cfg) + SeriesTrunc::expand(r2_correction_ratfunc(cfg.genus), cfg.degree_bound);
}

Poly integral_prefix(const SeriesTrunc& s, int dim, const std::string& what) {
    Poly p = s.prefix_poly(dim);
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coeff(k).is_integer())
            throw IntegralityViolation(what + ": coefficient of t^" + std::to_string(k) +
                                       " is " + p.coeff(k).str());
    }
    return p;
}

Poly p_m2(const GenusConfig& cfg) {
    return integral_prefix(pg_r2(cfg), cfg.dim(), "P(M2) at genus " + std::to_string(cfg.genus));
}

namespace {

// Center of the blow-up M2 -> K: 2^{2g} copies of a P^2-bundle over Gr(2,g).
Poly k_center(int g) { return projective_poincare(2) * gaussian_binomial(g, 2); }

// The correction factor in P(K) is t^2 + ... + t^{2g-4} = geom_sum(2, 2c-2),
// which pins the codimension of the center at c = g-1.
int k_codim(int g) { return g - 1; }

// K is in turn the blow-up of N along 2^{2g} copies of a P^{g-2}-bundle over
// Gr(2,g), with correction factor t^2 + t^4, i.e. codimension 3.
Poly n_center(int g) { return projective_poincare(g - 2) * gaussian_binomial(g, 2); }
constexpr int kNCodim = 3;

}  // namespace

Poly p_k(const GenusConfig& cfg) {
    const int g = cfg.genus;
    return blowup_poincare(p_m2(cfg), k_center(g), k_codim(g), two_pow_2g(g));
}

Poly p_n_via_blowdown(const GenusConfig& cfg) {
    const int g = cfg.genus;
    Poly n = p_k(cfg) - blowup_correction(n_center(g), kNCodim, two_pow_2g(g));

    // Independent route: P(N) = P(M2) + 2^{2g} P(Gr(2,g)) (t^6 - t^{2g-2})/(1-t^2).
    // At g = 3 the numerator is negative-leading, at g = 4 it vanishes.
    RatFunc factor(Poly::monomial(6) - Poly::monomial(2 * g - 2), one_minus(2));
    Poly alt = p_m2(cfg) + (two_pow_2g(g) * gaussian_binomial(g, 2)) * factor.to_polynomial();
    if (alt != n)
        throw MismatchWithPipeline("P(N) blow-down routes disagree at genus " + std::to_string(g));
    return n;
}

ClosedFormTerms p_n_closed_terms(const GenusConfig& cfg) {
    const int g = cfg.genus;
    const Poly d24 = one_minus(2) * one_minus(4);
    const Rational half(1, 2);

    ClosedFormTerms terms;
    terms.term1 = RatFunc(binom_cubes(g), d24);
    terms.term2 = -RatFunc((projective_poincare(2) * binom_plus(g)).shifted(2 * g - 2), d24);
    terms.term3 = half * (RatFunc(Poly::monomial(2), one_minus(2)) *
                          (RatFunc(one_plus(4 * g - 6) * binom_plus(g), one_minus(2)) +
                           RatFunc(one_minus(4 * g - 6) * binom_minus(g), one_plus(2))));
    terms.term4 = two_pow_2g(g) *
                  (RatFunc((one_minus(6 * g - 6) * one_plus(4)).shifted(2),
                           one_minus(2) * one_minus(2) * one_minus(4)) -
                   RatFunc((one_minus(6) * one_minus(2 * g - 2) * one_plus(4)).shifted(2 * g - 2),
                           one_minus(2) * one_minus(2) * one_minus(2) * one_minus(4)));
    return terms;
}

Poly p_n_closed(const GenusConfig& cfg) {
    RatFunc sum = p_n_closed_terms(cfg).sum();
    SeriesTrunc s = SeriesTrunc::expand(sum, cfg.degree_bound);
    Poly n = integral_prefix(s, cfg.dim(), "closed form P(N) at genus " + std::to_string(cfg.genus));
    if (n != p_n_via_blowdown(cfg))
        throw MismatchWithPipeline("closed form P(N) disagrees with the blow-down route at genus " +
                                   std::to_string(cfg.genus));
    return n;
}

long long hecke_hilbert(int g, long long n) {
    if (g < 3) throw std::invalid_argument("hecke_hilbert: genus must be >= 3");
    return (4 * n + 1) * (4 * n - 1) * static_cast<long long>(g - 1);
}

long long euler_characteristic(const Poly& p) {
    return p.eval(Rational(-1)).to_int64();
}

namespace {

bool palindromic(const Poly& p, int dim) {
    for (int k = 0; k <= dim; ++k)
        if (p.coeff(k) != p.coeff(dim - k)) return false;
    return true;
}

}  // namespace

BettiTable betti_table(const GenusConfig& cfg, Space space) {
    Poly p;
    switch (space) {
        case Space::M2: p = p_m2(cfg); break;
        case Space::K: p = p_k(cfg); break;
        case Space::N: p = p_n_via_blowdown(cfg); break;
    }
    BettiTable table;
    table.genus = cfg.genus;
    table.space = space;
    table.dim = cfg.dim();
    table.betti.reserve(static_cast<size_t>(table.dim) + 1);
    for (int k = 0; k <= table.dim; ++k) {
        const Rational& c = p.coeff(k);
        if (!c.is_integer() || c.is_negative())
            throw IntegralityViolation("betti_table: b_" + std::to_string(k) + " = " + c.str() +
                                       " is not a nonnegative integer");
        table.betti.push_back(c.to_int64());
    }
    if (table.betti.at(0) != 1)
        throw IntegralityViolation("betti_table: b_0 != 1");
    table.euler = euler_characteristic(p);
    table.duality_ok = palindromic(p, table.dim);
    return table;
}

}  // namespace moduli
