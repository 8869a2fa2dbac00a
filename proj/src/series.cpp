#include "moduli/series.hpp"

#include <sstream>

namespace moduli {

SeriesTrunc::SeriesTrunc(int bound) : bound_(bound) {
    if (bound < 0) throw std::invalid_argument("SeriesTrunc: negative bound");
    c_.assign(static_cast<size_t>(bound) + 1, Rational(0));
}

SeriesTrunc::SeriesTrunc(std::vector<Rational> coeffs, int bound) : c_(std::move(coeffs)), bound_(bound) {
    if (bound < 0) throw std::invalid_argument("SeriesTrunc: negative bound");
    if (c_.size() != static_cast<size_t>(bound) + 1)
        throw std::invalid_argument("SeriesTrunc: coefficient count does not match bound");
}

SeriesTrunc SeriesTrunc::of_poly(const Poly& p, int bound) {
    SeriesTrunc s(bound);
    for (int k = 0; k <= bound && k <= p.degree(); ++k) s.c_[static_cast<size_t>(k)] = p.coeff(k);
    return s;
}

SeriesTrunc SeriesTrunc::expand(const RatFunc& f, int bound) {
    const Poly& den = f.den();
    if (den.coeff(0).is_zero())
        throw std::domain_error("SeriesTrunc::expand: denominator vanishes at t = 0");
    SeriesTrunc s(bound);
    const Rational d0 = den.coeff(0);
    for (int k = 0; k <= bound; ++k) {
        Rational acc = f.num().coeff(k);
        for (int i = 1; i <= den.degree() && i <= k; ++i)
            acc -= den.coeff(i) * s.c_[static_cast<size_t>(k - i)];
        s.c_[static_cast<size_t>(k)] = acc / d0;
    }
    return s;
}

const Rational& SeriesTrunc::coeff(int k) const {
    if (k < 0 || k > bound_) throw std::out_of_range("SeriesTrunc::coeff: degree out of range");
    return c_[static_cast<size_t>(k)];
}

void SeriesTrunc::require_same_bound(const SeriesTrunc& a, const SeriesTrunc& b) {
    if (a.bound_ != b.bound_)
        throw std::invalid_argument("SeriesTrunc: mixed truncation bounds (" +
                                    std::to_string(a.bound_) + " vs " + std::to_string(b.bound_) + ")");
}

SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b) {
    SeriesTrunc::require_same_bound(a, b);
    SeriesTrunc r(a.bound_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b) {
    SeriesTrunc::require_same_bound(a, b);
    SeriesTrunc r(a.bound_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
    SeriesTrunc::require_same_bound(a, b);
    SeriesTrunc r(a.bound_);
    for (int k = 0; k <= r.bound_; ++k) {
        Rational acc(0);
        for (int i = 0; i <= k; ++i) acc += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(k - i)];
        r.c_[static_cast<size_t>(k)] = acc;
    }
    return r;
}

Poly SeriesTrunc::prefix_poly(int d) const {
    if (d < 0 || d > bound_) throw std::out_of_range("SeriesTrunc::prefix_poly: degree out of range");
    return Poly(std::vector<Rational>(c_.begin(), c_.begin() + d + 1));
}

std::string SeriesTrunc::str() const {
    std::ostringstream os;
    os << prefix_poly(bound_).str() << " + O(t^" << bound_ + 1 << ")";
    return os.str();
}

}  // namespace moduli
