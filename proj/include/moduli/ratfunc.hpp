#pragma once

#include <optional>
#include <string>

#include "moduli/poly.hpp"

namespace moduli {

// Quotient of two polynomials in canonical form: gcd(num, den) = 1 and the
// denominator is monic (so equal functions compare equal componentwise).
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}  // NOLINT: implicit by design
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const Rational& s, const RatFunc& f) {
        return RatFunc(f.num_.scaled(s), f.den_);
    }

    // f(1/t) with all negative powers cleared into a num/den pair. An involution
    // on nonzero functions; zero maps to zero.
    RatFunc inverted_variable() const;

    // The quotient iff den divides num exactly.
    std::optional<Poly> as_polynomial() const;
    // Same, but throws NotPolynomial (carrying the remainder) on failure.
    Poly to_polynomial() const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;

private:
    Poly num_, den_;
};

}  // namespace moduli
