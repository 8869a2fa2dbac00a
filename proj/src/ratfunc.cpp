#include "moduli/ratfunc.hpp"

namespace moduli {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverted_variable() const {
    if (is_zero()) return RatFunc();
    const int dn = num_.degree();
    const int dd = den_.degree();
    Poly rn = num_.reversed();
    Poly rd = den_.reversed();
    // f(1/t) = t^(dd-dn) * rev(num) / rev(den); clear the power into whichever
    // side keeps both parts polynomial.
    if (dd >= dn) return RatFunc(rn.shifted(dd - dn), rd);
    return RatFunc(rn, rd.shifted(dn - dd));
}

std::optional<Poly> RatFunc::as_polynomial() const {
    auto [q, r] = Poly::divmod(num_, den_);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Poly RatFunc::to_polynomial() const {
    auto [q, r] = Poly::divmod(num_, den_);
    if (!r.is_zero())
        throw NotPolynomial("RatFunc::to_polynomial: remainder " + r.str() + " over " + den_.str(), r);
    return q;
}

std::string RatFunc::str() const {
    if (den_ == Poly::one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace moduli
