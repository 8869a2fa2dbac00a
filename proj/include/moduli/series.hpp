#pragma once

#include <string>
#include <vector>

#include "moduli/ratfunc.hpp"

namespace moduli {

// Power series in t truncated at an inclusive degree bound D: exactly the
// coefficients of t^0..t^D. Arithmetic demands equal bounds on both operands;
// mixing bounds is an error rather than a silent re-truncation.
class SeriesTrunc {
public:
    explicit SeriesTrunc(int bound);
    SeriesTrunc(std::vector<Rational> coeffs, int bound);

    static SeriesTrunc of_poly(const Poly& p, int bound);
    // Power-series expansion of f at t = 0; requires den(f)(0) != 0.
    static SeriesTrunc expand(const RatFunc& f, int bound);

    int bound() const { return bound_; }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b);
    friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b);
    friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b);

    // Coefficients t^0..t^d as a polynomial (d <= bound).
    Poly prefix_poly(int d) const;

    bool operator==(const SeriesTrunc& o) const { return bound_ == o.bound_ && c_ == o.c_; }
    bool operator!=(const SeriesTrunc& o) const { return !(*this == o); }

    std::string str() const;

private:
    static void require_same_bound(const SeriesTrunc& a, const SeriesTrunc& b);

    std::vector<Rational> c_;  // size bound_ + 1
    int bound_;
};

}  // namespace moduli
