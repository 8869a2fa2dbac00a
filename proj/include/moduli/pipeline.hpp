#pragma once

#include <string>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/series.hpp"

namespace moduli {

// Genus plus truncation bound for the staged series computation. The bound
// defaults to 6g-6 (the real dimension of the desingularized moduli spaces);
// it may be raised for diagnostics, but coefficients above 6g-6 are untrusted.
struct GenusConfig {
    int genus;
    int degree_bound;

    explicit GenusConfig(int g) : GenusConfig(g, 6 * g - 6) {}
    GenusConfig(int g, int bound) : genus(g), degree_bound(bound) {
        if (g < 3) throw std::invalid_argument("GenusConfig: genus must be >= 3");
        if (bound < 6 * g - 6)
            throw std::invalid_argument("GenusConfig: truncation bound must be >= 6g-6");
    }

    int dim() const { return 6 * genus - 6; }
};

enum class Space { M2, K, N };

std::string space_name(Space s);     // "m2", "k", "n"
Space space_from_name(const std::string& s);

// Equivariant series of the semistable locus:
//   ((1+t^3)^{2g} - t^{2g+2} (1+t)^{2g}) / ((1-t^2)(1-t^4)).
SeriesTrunc pg_rss(const GenusConfig& cfg);

// After the first blow-up and removal of unstable strata: adds
//   2^{2g} [ (t^2+...+t^{6g-2})/(1-t^4) - t^{4g-2}(1+t^2+...+t^{2g-2})/(1-t^2) ].
SeriesTrunc pg_r1(const GenusConfig& cfg);

// After the second blow-up: adds
//   (t^2+...+t^{4g-6}) [ (1/2)(1+t)^{2g}/(1-t^2) + (1/2)(1-t)^{2g}/(1+t^2)
//                        + 2^{2g}(t^2+...+t^{2g-2})/(1-t^4) ]
// - t^{2g-2}(1+t^2+...+t^{2g-4})/(1-t^2) [ (1+t)^{2g} + 2^{2g}(t^2+...+t^{2g-2}) ].
// Intermediate coefficients may be half-integers; only the assembled result is
// integral.
SeriesTrunc pg_r2(const GenusConfig& cfg);

// The exact rational functions behind the three stages (pg_* are their expansions).
RatFunc rss_ratfunc(int g);
RatFunc r1_correction_ratfunc(int g);
RatFunc r2_correction_ratfunc(int g);

// Poincare polynomial of the partial desingularization M2: pg_r2 truncated to
// degree 6g-6. Throws IntegralityViolation if a coefficient is not an integer.
Poly p_m2(const GenusConfig& cfg);

// P(K) = P(M2) + 2^{2g} (1+t^2+t^4) P(Gr(2,g)) (t^2+...+t^{2g-4}), realized as a
// blow-up along 2^{2g} copies of a P^2-bundle over Gr(2,g).
Poly p_k(const GenusConfig& cfg);

// P(N) = P(K) - 2^{2g} (1+t^2+...+t^{2g-4}) P(Gr(2,g)) (t^2+t^4). Cross-checked
// against the alternate route P(M2) + 2^{2g} P(Gr(2,g)) (t^6-t^{2g-2})/(1-t^2);
// disagreement throws MismatchWithPipeline.
Poly p_n_via_blowdown(const GenusConfig& cfg);

// The four summands of the closed form for P(N). Each satisfies the exact
// functional equation f(t) = t^{6g-6} f(1/t).
struct ClosedFormTerms {
    RatFunc term1, term2, term3, term4;
    RatFunc sum() const { return term1 + term2 + term3 + term4; }
};

ClosedFormTerms p_n_closed_terms(const GenusConfig& cfg);

// Expansion of the four-term sum truncated at degree 6g-6. Must agree with
// p_n_via_blowdown exactly; otherwise throws MismatchWithPipeline.
Poly p_n_closed(const GenusConfig& cfg);

// Hilbert polynomial value (4n+1)(4n-1)(g-1).
long long hecke_hilbert(int g, long long n);

// Evaluation at t = -1; requires an integer result.
long long euler_characteristic(const Poly& p);

// Betti numbers of one space at one genus, with derived statistics.
struct BettiTable {
    int genus;
    Space space;
    int dim;                       // 6g-6
    std::vector<long long> betti;  // b_0..b_dim
    long long euler;
    bool duality_ok;               // b_k == b_{dim-k} for all k
};

BettiTable betti_table(const GenusConfig& cfg, Space space);

// Coefficients t^0..t^dim of a series as a polynomial with integer entries;
// throws IntegralityViolation otherwise. Shared by the P(M2) stage and tests.
Poly integral_prefix(const SeriesTrunc& s, int dim, const std::string& what);

}  // namespace moduli
