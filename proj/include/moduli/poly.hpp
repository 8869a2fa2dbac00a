#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moduli/rational.hpp"

namespace moduli {

// Dense univariate polynomial in t over the rationals.
// Normal form: trailing zero coefficients stripped; the zero polynomial is the
// empty coefficient sequence (degree() reports -1 for it).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static Poly constant(const Rational& r) { return Poly({r}); }
    static Poly one() { return constant(1); }
    static Poly monomial(int degree, const Rational& coeff = Rational(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Coefficient of t^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const Rational& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p) { return p.scaled(s); }

    Poly scaled(const Rational& s) const;
    Poly pow(unsigned k) const;
    Poly shifted(int k) const;  // t^k * p, k >= 0

    // Coefficient reversal: t^degree * p(1/t). Zero maps to zero.
    Poly reversed() const;

    Rational eval(const Rational& x) const;

    // Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Exact quotient; throws NotPolynomial when the remainder is nonzero.
    static Poly div_exact(const Poly& a, const Poly& b);
    // Monic gcd (zero if both inputs are zero).
    static Poly gcd(Poly a, Poly b);

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    std::string str() const;

private:
    void normalize();

    std::vector<Rational> c_;
};

// t^lo + t^(lo+2) + ... + t^hi; the empty sum (hi < lo) is zero.
// Both arguments must be even and nonnegative where applicable.
Poly geom_sum(int lo, int hi);

// Division with a nonzero remainder where an exact polynomial was required.
struct NotPolynomial : std::runtime_error {
    NotPolynomial(const std::string& what, Poly rem)
        : std::runtime_error(what), remainder(std::move(rem)) {}
    Poly remainder;
};

}  // namespace moduli
