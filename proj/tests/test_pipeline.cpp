#include <doctest.h>

#include "moduli/blowup.hpp"
#include "moduli/grassmann.hpp"
#include "moduli/pipeline.hpp"
#include "oracle.hpp"

using namespace moduli;

namespace {

// Frozen from the independent straight-line oracle (tests/oracle.cpp), g = 3.
const std::vector<long long> kM2Genus3 = {1, 0, 66, 6, 145, 6, 224, 6, 145, 6, 66, 0, 1};
const std::vector<long long> kKGenus3 = {1, 0, 130, 6, 273, 6, 416, 6, 273, 6, 130, 0, 1};
const std::vector<long long> kNGenus3 = {1, 0, 66, 6, 81, 6, 160, 6, 81, 6, 66, 0, 1};

bool poly_equals(const Poly& p, const std::vector<long long>& expect) {
    if (p.degree() + 1 != static_cast<int>(expect.size())) return false;
    for (size_t k = 0; k < expect.size(); ++k)
        if (p.coeff(static_cast<int>(k)) != Rational(expect[k])) return false;
    return true;
}

}  // namespace

TEST_CASE("genus config validation") {
    CHECK_THROWS_AS(GenusConfig(2), std::invalid_argument);
    CHECK_THROWS_AS(GenusConfig(3, 11), std::invalid_argument);
    CHECK(GenusConfig(3).dim() == 12);
    CHECK(GenusConfig(3, 30).degree_bound == 30);
}

TEST_CASE("equivariant series low-order coefficients") {
    for (int g : {3, 4, 6}) {
        SeriesTrunc s = pg_rss(GenusConfig(g));
        CHECK(s.coeff(0) == Rational(1));
        CHECK(s.coeff(1) == Rational(0));
    }
    CHECK(pg_rss(GenusConfig(3)).coeff(3) == Rational(6));  // 2g classes in degree 3
}

TEST_CASE("first correction stage") {
    for (int g : {3, 5}) {
        GenusConfig cfg(g);
        SeriesTrunc diff = pg_r1(cfg) - pg_rss(cfg);
        CHECK(diff.coeff(0).is_zero());
        CHECK(diff.coeff(1).is_zero());
        const Rational big = Rational::pow2(2 * g);
        CHECK(diff.coeff(2) == big);
        for (int k = 0; k <= cfg.dim(); ++k) CHECK((diff.coeff(k) / big).is_integer());
    }
}

TEST_CASE("second correction stage") {
    GenusConfig cfg(3);
    SeriesTrunc diff = pg_r2(cfg) - pg_r1(cfg);
    CHECK(diff.coeff(0).is_zero());
    CHECK(diff.coeff(1).is_zero());
    CHECK(diff.coeff(2) == Rational(1));  // constant term of the half-bracket
}

TEST_CASE("the paired half-integer summands assemble to integers") {
    for (int g : {3, 4, 5}) {
        Poly one = Poly::one();
        RatFunc h1 = Rational(1, 2) * RatFunc((one + Poly::monomial(1)).pow(2 * g),
                                              one - Poly::monomial(2));
        RatFunc h2 = Rational(1, 2) * RatFunc((one - Poly::monomial(1)).pow(2 * g),
                                              one + Poly::monomial(2));
        SeriesTrunc s1 = SeriesTrunc::expand(h1, 12), s2 = SeriesTrunc::expand(h2, 12);
        bool some_half = false;
        for (int k = 0; k <= 12; ++k)
            if (!s1.coeff(k).is_integer()) some_half = true;
        CHECK(some_half);
        SeriesTrunc sum = s1 + s2;
        for (int k = 0; k <= 12; ++k) CHECK(sum.coeff(k).is_integer());
    }
}

TEST_CASE("P(M2) genus 3 table") {
    Poly m2 = p_m2(GenusConfig(3));
    CHECK(poly_equals(m2, kM2Genus3));
}

TEST_CASE("P(M2) structural facts across genera") {
    for (int g = 3; g <= 8; ++g) {
        Poly m2 = p_m2(GenusConfig(g));
        CHECK(m2.coeff(0) == Rational(1));
        CHECK(m2.coeff(1).is_zero());
        CHECK(m2.degree() == 6 * g - 6);
        for (int k = 0; k <= m2.degree(); ++k) {
            CHECK(m2.coeff(k).is_integer());
            CHECK(!m2.coeff(k).is_negative());
        }
    }
}

TEST_CASE("P(K) is the blow-up of P(M2)") {
    for (int g = 3; g <= 8; ++g) {
        GenusConfig cfg(g);
        Poly m2 = p_m2(cfg), k = p_k(cfg);
        Poly corr = blowup_correction(projective_poincare(2) * gaussian_binomial(g, 2), g - 1,
                                      Rational::pow2(2 * g));
        CHECK(k - m2 == corr);
        // the blow-up only adds cohomology
        for (int i = 0; i <= k.degree(); ++i) CHECK(k.coeff(i) >= m2.coeff(i));
        // smooth projective: Poincare duality
        for (int i = 0; i <= cfg.dim(); ++i) CHECK(k.coeff(i) == k.coeff(cfg.dim() - i));
    }
    CHECK(poly_equals(p_k(GenusConfig(3)), kKGenus3));
    CHECK(p_k(GenusConfig(3)).coeff(2) - p_m2(GenusConfig(3)).coeff(2) == Rational(64));
}

TEST_CASE("P(N) via blow-down, both routes") {
    for (int g = 3; g <= 8; ++g) {
        GenusConfig cfg(g);
        Poly k = p_k(cfg), n = p_n_via_blowdown(cfg);
        Poly corr = blowup_correction(projective_poincare(g - 2) * gaussian_binomial(g, 2), 3,
                                      Rational::pow2(2 * g));
        CHECK(k - n == corr);
        for (int i = 0; i <= cfg.dim(); ++i) CHECK(n.coeff(i) == n.coeff(cfg.dim() - i));
    }
    CHECK(poly_equals(p_n_via_blowdown(GenusConfig(3)), kNGenus3));
}

TEST_CASE("the alternate correction factor changes sign and vanishes") {
    // (t^6 - t^{2g-2})/(1-t^2) is -t^4 at g = 3 and identically zero at g = 4.
    RatFunc f3(Poly::monomial(6) - Poly::monomial(4), Poly::one() - Poly::monomial(2));
    CHECK(f3.to_polynomial() == -Poly::monomial(4));
    RatFunc f4(Poly::monomial(6) - Poly::monomial(6), Poly::one() - Poly::monomial(2));
    CHECK(f4.to_polynomial() == Poly());
    CHECK(p_n_via_blowdown(GenusConfig(4)) == p_m2(GenusConfig(4)));
    // negative-leading numerator: P(N) <= P(M2) coefficientwise at g = 3
    Poly n = p_n_via_blowdown(GenusConfig(3)), m2 = p_m2(GenusConfig(3));
    for (int i = 0; i <= 12; ++i) CHECK(n.coeff(i) <= m2.coeff(i));
}

TEST_CASE("closed form equals the blow-down route") {
    for (int g = 3; g <= 8; ++g) {
        GenusConfig cfg(g);
        CHECK(p_n_closed(cfg) == p_n_via_blowdown(cfg));
    }
}

TEST_CASE("closed-form sum is exactly a polynomial") {
    for (int g : {3, 4, 5}) {
        GenusConfig cfg(g);
        auto sum_poly = p_n_closed_terms(cfg).sum().as_polynomial();
        REQUIRE(sum_poly.has_value());
        CHECK(*sum_poly == p_n_via_blowdown(cfg));
    }
}

TEST_CASE("pipeline matches the independent straight-line oracle") {
    for (int g : {3, 5}) {
        GenusConfig cfg(g);
        Poly m2 = p_m2(cfg), nc = p_n_closed(cfg);
        oracle::Series om2 = oracle::m2_series(g, cfg.dim());
        oracle::Series on = oracle::n_closed_series(g, cfg.dim());
        for (int k = 0; k <= cfg.dim(); ++k) {
            CHECK(mpq_class(m2.coeff(k).num()) == om2[static_cast<size_t>(k)] * m2.coeff(k).den());
            CHECK(mpq_class(nc.coeff(k).num()) == on[static_cast<size_t>(k)] * nc.coeff(k).den());
        }
    }
}

TEST_CASE("hilbert polynomial of a good cycle") {
    CHECK(hecke_hilbert(3, 1) == 30);
    CHECK(hecke_hilbert(4, 2) == 189);
    for (int g = 3; g <= 6; ++g) CHECK(hecke_hilbert(g, 0) == -(g - 1));
    CHECK_THROWS_AS(hecke_hilbert(2, 1), std::invalid_argument);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(Poly({1, 0, 1, 0, 1})) == 3);
    for (int g = 3; g <= 7; ++g) {
        long long c = g;
        c = c * (g - 1) / 2;
        CHECK(euler_characteristic(gaussian_binomial(g, 2)) == c);
    }
}

TEST_CASE("betti table assembly") {
    BettiTable t = betti_table(GenusConfig(3), Space::N);
    CHECK(t.genus == 3);
    CHECK(t.dim == 12);
    CHECK(t.space == Space::N);
    CHECK(t.betti == kNGenus3);
    CHECK(t.duality_ok);
    CHECK(t.euler == 432);
    CHECK(betti_table(GenusConfig(3), Space::K).euler == 1200);
    CHECK(betti_table(GenusConfig(3), Space::M2).euler == 624);
}

TEST_CASE("space names") {
    CHECK(space_name(Space::M2) == "m2");
    CHECK(space_from_name("k") == Space::K);
    CHECK_THROWS_AS(space_from_name("x"), std::invalid_argument);
}

TEST_CASE("non-integer series prefixes are rejected") {
    SeriesTrunc s = SeriesTrunc::expand(RatFunc(Poly({Rational(1, 2)})), 4);
    CHECK_THROWS_AS(integral_prefix(s, 4, "test"), IntegralityViolation);
}

TEST_CASE("raising the truncation bound does not change the table") {
    GenusConfig tight(3), loose(3, 20);
    CHECK(p_m2(tight) == p_m2(loose));
    CHECK(p_n_closed(tight) == p_n_closed(loose));
}
