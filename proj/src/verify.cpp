#include "moduli/verify.hpp"

#include "moduli/blowup.hpp"
#include "moduli/grassmann.hpp"

namespace moduli {

bool check_duality_rf(const RatFunc& f, int d) {
    if (f.is_zero()) return true;
    return RatFunc(Poly::monomial(d)) * f.inverted_variable() == f;
}

std::vector<CheckResult> check_betti_sanity(const Poly& p, int dim) {
    std::vector<CheckResult> out;
    bool integral = true, nonneg = true;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coeff(k).is_integer()) integral = false;
        if (p.coeff(k).is_negative()) nonneg = false;
    }
    out.push_back({"integer_coefficients", integral, integral ? "" : "non-integer coefficient present"});
    out.push_back({"nonnegative_coefficients", nonneg, nonneg ? "" : "negative coefficient present"});
    out.push_back({"b0_is_one", p.coeff(0) == Rational(1), "b0 = " + p.coeff(0).str()});
    out.push_back({"b1_is_zero", p.coeff(1).is_zero(), "b1 = " + p.coeff(1).str()});
    out.push_back({"degree_matches_dim", p.degree() == dim,
                   "degree " + std::to_string(p.degree()) + ", dim " + std::to_string(dim)});
    bool pal = true;
    for (int k = 0; k <= dim; ++k)
        if (p.coeff(k) != p.coeff(dim - k)) pal = false;
    out.push_back({"palindrome", pal, pal ? "" : "b_k != b_{dim-k} somewhere"});
    return out;
}

namespace {

void add_check(VerifyReport& r, const std::string& name, bool pass, const std::string& detail = "") {
    r.checks.push_back({name, pass, detail});
}

void add_sanity(VerifyReport& r, const std::string& prefix, const Poly& p, int dim,
                bool palindrome_required) {
    for (const auto& c : check_betti_sanity(p, dim)) {
        if (c.name == "palindrome" && !palindrome_required) {
            // Rational duality of the orbifold M2 is expected but not asserted;
            // report it without gating the run on it.
            add_check(r, prefix + "_palindrome_reported", true,
                      c.pass ? "holds" : "fails (informational)");
        } else {
            add_check(r, prefix + "_" + c.name, c.pass, c.detail);
        }
    }
}

}  // namespace

VerifyReport cross_check_all(const GenusConfig& cfg, const VerifyOptions& opts) {
    VerifyReport report;
    report.genus = cfg.genus;
    const int g = cfg.genus;
    const int dim = cfg.dim();
    const Rational big = Rational::pow2(static_cast<unsigned long>(2 * g));

    Poly m2 = p_m2(cfg);
    Poly k = p_k(cfg);
    Poly n = p_n_via_blowdown(cfg);

    ClosedFormTerms terms = p_n_closed_terms(cfg);
    if (opts.corrupt_term3)
        terms.term3 = terms.term3 + RatFunc(Poly::monomial(2));

    // Closed form vs blow-down, coefficient by coefficient.
    SeriesTrunc closed = SeriesTrunc::expand(terms.sum(), cfg.degree_bound);
    add_check(report, "closed_form_equals_blowdown", closed.prefix_poly(dim) == n);

    // The two blow-up corrections.
    Poly corr_k = blowup_correction(projective_poincare(2) * gaussian_binomial(g, 2), g - 1, big);
    add_check(report, "k_minus_m2_is_blowup_correction", k - m2 == corr_k);
    Poly corr_n = blowup_correction(projective_poincare(g - 2) * gaussian_binomial(g, 2), 3, big);
    add_check(report, "k_minus_n_is_blowdown_correction", k - n == corr_n);

    // Alternate route: P(N) - P(M2) = 2^{2g} P(Gr(2,g)) (t^6 - t^{2g-2})/(1-t^2).
    RatFunc factor(Poly::monomial(6) - Poly::monomial(2 * g - 2),
                   Poly::one() - Poly::monomial(2));
    Poly alt_corr = (big * gaussian_binomial(g, 2)) * factor.to_polynomial();
    std::string note = factor.is_zero()
        ? "correction (t^6 - t^{2g-2})/(1-t^2) is identically zero at genus 4; P(N) = P(M2)"
        : "";
    add_check(report, "n_minus_m2_matches_alternate_route", n - m2 == alt_corr, note);

    // Per-term functional equation f(t) = t^{6g-6} f(1/t).
    add_check(report, "term1_duality", check_duality_rf(terms.term1, dim));
    add_check(report, "term2_duality", check_duality_rf(terms.term2, dim));
    add_check(report, "term3_duality", check_duality_rf(terms.term3, dim));
    add_check(report, "term4_duality", check_duality_rf(terms.term4, dim));

    // Whether the exact four-term sum is a polynomial on the nose (it is; the
    // truncation convention does not get a chance to hide a tail).
    auto sum_poly = terms.sum().as_polynomial();
    if (sum_poly)
        add_check(report, "closed_form_is_exact_polynomial", *sum_poly == n,
                  "rational-function sum divides out exactly");
    else
        add_check(report, "closed_form_is_exact_polynomial", false,
                  "sum leaves a nonzero remainder");

    // Grassmannian product formula and cell count.
    RatFunc gr_formula((Poly::one() - Poly::monomial(2 * g)) * (Poly::one() - Poly::monomial(2 * g - 2)),
                       (Poly::one() - Poly::monomial(2)) * (Poly::one() - Poly::monomial(4)));
    Poly gr = gaussian_binomial(g, 2);
    add_check(report, "grassmannian_product_formula", gr_formula.to_polynomial() == gr);
    long long cells = gr.eval(Rational(-1)).to_int64();
    add_check(report, "grassmannian_cell_count", cells == static_cast<long long>(g) * (g - 1) / 2,
              "chi = " + std::to_string(cells));

    add_sanity(report, "m2", m2, dim, /*palindrome_required=*/false);
    add_sanity(report, "k", k, dim, /*palindrome_required=*/true);
    add_sanity(report, "n", n, dim, /*palindrome_required=*/true);

    return report;
}

}  // namespace moduli
