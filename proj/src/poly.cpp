#include "moduli/poly.hpp"

#include <sstream>

namespace moduli {

namespace {
const Rational kZero(0);
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    if (coeff.is_zero()) return Poly();
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly r = Poly::one(), base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        if (k >>= 1u) base = base * base;
    }
    return r;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
}

Poly Poly::reversed() const {
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    std::vector<Rational> r = a.c_;
    const Rational& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational f = r[static_cast<size_t>(k + b.degree())] / lead;
        q[static_cast<size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int i = 0; i <= b.degree(); ++i)
            r[static_cast<size_t>(k + i)] -= f * b.coeff(i);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw NotPolynomial("Poly::div_exact: nonzero remainder " + r.str(), r);
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        // Scale each remainder monic to keep coefficient growth in check.
        if (!r.is_zero()) r = r.scaled(Rational(1) / r.leading());
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        Rational abs = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        if (k == 0) {
            os << abs.str();
        } else {
            if (abs != Rational(1)) os << abs.str() << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly geom_sum(int lo, int hi) {
    if (lo % 2 != 0 || hi % 2 != 0)
        throw std::invalid_argument("geom_sum: arguments must be even");
    if (lo < 0) throw std::invalid_argument("geom_sum: negative lower bound");
    if (hi < lo) return Poly();
    std::vector<Rational> c(static_cast<size_t>(hi) + 1, Rational(0));
    for (int k = lo; k <= hi; k += 2) c[static_cast<size_t>(k)] = Rational(1);
    return Poly(std::move(c));
}

}  // namespace moduli
