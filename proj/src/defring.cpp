#include "moduli/defring.hpp"

#include <algorithm>
#include <sstream>

namespace moduli {

DefRing::DefRing(std::vector<DefVar> vars) : vars_(std::move(vars)) {
    for (size_t i = 0; i < vars_.size(); ++i) {
        const DefVar& v = vars_[i];
        if (v.name.empty()) throw std::invalid_argument("DefRing: empty variable name");
        if (v.invertible && v.nilpotent_order)
            throw std::invalid_argument("DefRing: variable '" + v.name +
                                        "' cannot be both invertible and nilpotent");
        if (v.nilpotent_order) {
            if (*v.nilpotent_order != 2)
                throw std::invalid_argument("DefRing: only nilpotency order 2 is supported");
            if (nilpotent_)
                throw std::invalid_argument("DefRing: at most one nilpotent variable");
            nilpotent_ = static_cast<int>(i);
        }
        for (size_t j = 0; j < i; ++j)
            if (vars_[j].name == v.name)
                throw std::invalid_argument("DefRing: duplicate variable '" + v.name + "'");
    }
}

int DefRing::index_of(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("DefRing: unknown variable '" + std::string(name) + "'");
}

bool DefRing::same_universe(const DefRing& o) const {
    if (vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i) {
        const DefVar& a = vars_[i];
        const DefVar& b = o.vars_[i];
        if (a.name != b.name || a.invertible != b.invertible || a.nilpotent_order != b.nilpotent_order)
            return false;
    }
    return true;
}

DefRingPtr make_ring(std::vector<DefVar> vars) {
    return std::make_shared<const DefRing>(std::move(vars));
}

DefRingElem::DefRingElem(DefRingPtr ring, TermMap terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void DefRingElem::normalize() {
    const std::optional<int> nil = ring_->nilpotent_index();
    for (auto it = terms_.begin(); it != terms_.end();) {
        bool drop = it->second.is_zero();
        if (!drop && nil && it->first[static_cast<size_t>(*nil)] >= 2) drop = true;
        it = drop ? terms_.erase(it) : std::next(it);
    }
}

DefRingElem DefRingElem::zero(DefRingPtr ring) { return DefRingElem(std::move(ring), {}); }

DefRingElem DefRingElem::constant(DefRingPtr ring, const Rational& c) {
    TermMap t;
    if (!c.is_zero()) t.emplace(Exponents(static_cast<size_t>(ring->arity()), 0), c);
    return DefRingElem(std::move(ring), std::move(t));
}

DefRingElem DefRingElem::variable(DefRingPtr ring, std::string_view name) {
    return monomial(std::move(ring), {{std::string(name), 1}});
}

DefRingElem DefRingElem::monomial(DefRingPtr ring,
                                  const std::vector<std::pair<std::string, int>>& powers,
                                  const Rational& coeff) {
    Exponents e(static_cast<size_t>(ring->arity()), 0);
    for (const auto& [name, p] : powers) {
        const int i = ring->index_of(name);
        e[static_cast<size_t>(i)] += p;
    }
    for (int i = 0; i < ring->arity(); ++i) {
        if (e[static_cast<size_t>(i)] < 0 && !ring->var(i).invertible)
            throw std::invalid_argument("DefRingElem: negative exponent on non-invertible variable '" +
                                        ring->var(i).name + "'");
    }
    TermMap t;
    if (!coeff.is_zero()) t.emplace(std::move(e), coeff);
    return DefRingElem(std::move(ring), std::move(t));
}

bool DefRingElem::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (c != Rational(1)) return false;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void DefRingElem::require_compatible(const DefRingElem& a, const DefRingElem& b) {
    if (a.ring_ == b.ring_) return;
    if (!a.ring_->same_universe(*b.ring_))
        throw std::invalid_argument("DefRingElem: incompatible variable universes");
}

DefRingElem operator+(const DefRingElem& a, const DefRingElem& b) {
    DefRingElem::require_compatible(a, b);
    return detail::RawOps::to_elem(a.ring_, detail::RawOps::add(a.terms_, b.terms_));
}

DefRingElem operator-(const DefRingElem& a, const DefRingElem& b) {
    DefRingElem::require_compatible(a, b);
    return detail::RawOps::to_elem(a.ring_, detail::RawOps::add(a.terms_, detail::RawOps::negate(b.terms_)));
}

DefRingElem operator*(const DefRingElem& a, const DefRingElem& b) {
    DefRingElem::require_compatible(a, b);
    return detail::RawOps::to_elem(a.ring_, detail::RawOps::mul(a.terms_, b.terms_));
}

DefRingElem operator*(const Rational& s, const DefRingElem& a) {
    DefRingElem::TermMap t;
    if (!s.is_zero())
        for (const auto& [e, c] : a.terms_) t.emplace(e, s * c);
    return detail::RawOps::to_elem(a.ring_, std::move(t));
}

DefRingElem DefRingElem::operator-() const {
    return detail::RawOps::to_elem(ring_, detail::RawOps::negate(terms_));
}

DefRingElem DefRingElem::pow(unsigned k) const {
    DefRingElem r = constant(ring_, 1);
    DefRingElem base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        if (k >>= 1u) base = base * base;
    }
    return r;
}

DefRingElem DefRingElem::inv() const {
    if (is_zero()) throw NotAUnit("inv: zero is not a unit");
    const std::optional<int> nil = ring_->nilpotent_index();

    TermMap unit_part, nil_part;
    for (const auto& [e, c] : terms_) {
        if (nil && e[static_cast<size_t>(*nil)] > 0)
            nil_part.emplace(e, c);
        else
            unit_part.emplace(e, c);
    }
    if (unit_part.size() != 1)
        throw NotAUnit("inv: the nilpotent-free part is not a single monomial: " + str());
    const auto& [ue, uc] = *unit_part.begin();
    for (int i = 0; i < ring_->arity(); ++i) {
        if (ue[static_cast<size_t>(i)] != 0 && !ring_->var(i).invertible)
            throw NotAUnit("inv: monomial involves non-invertible variable '" + ring_->var(i).name +
                           "': " + str());
    }

    Exponents inv_e = ue;
    for (auto& x : inv_e) x = -x;
    TermMap ut;
    ut.emplace(std::move(inv_e), Rational(1) / uc);
    DefRingElem u_inv = detail::RawOps::to_elem(ring_, std::move(ut));

    if (nil_part.empty()) return u_inv;
    DefRingElem n = detail::RawOps::to_elem(ring_, std::move(nil_part));
    // (u(1+u^{-1}n))^{-1} = u^{-1}(1 - u^{-1}n); the square of the correction dies.
    return u_inv - u_inv * (u_inv * n);
}

DefRingElem DefRingElem::subst(std::string_view var, const DefRingElem& value) const {
    require_compatible(*this, value);
    const int vi = ring_->index_of(var);
    if (ring_->var(vi).invertible)
        throw std::invalid_argument("subst: only non-invertible variables can be substituted");
    DefRingElem acc = zero(ring_);
    for (const auto& [e, c] : terms_) {
        const int p = e[static_cast<size_t>(vi)];
        Exponents base = e;
        base[static_cast<size_t>(vi)] = 0;
        TermMap bt;
        bt.emplace(std::move(base), c);
        DefRingElem term = detail::RawOps::to_elem(ring_, std::move(bt));
        acc = acc + term * value.pow(static_cast<unsigned>(p));
    }
    return acc;
}

DefRingElem DefRingElem::at_zero(std::string_view var) const {
    const int vi = ring_->index_of(var);
    TermMap t;
    for (const auto& [e, c] : terms_) {
        const int p = e[static_cast<size_t>(vi)];
        if (p < 0)
            throw std::domain_error("at_zero: element has a pole along " + std::string(var));
        if (p == 0) t.emplace(e, c);
    }
    return detail::RawOps::to_elem(ring_, std::move(t));
}

DefRingElem DefRingElem::nilpotent_coefficient() const {
    const std::optional<int> nil = ring_->nilpotent_index();
    if (!nil) throw std::logic_error("nilpotent_coefficient: ring has no nilpotent variable");
    TermMap t;
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(*nil)] == 1) {
            Exponents r = e;
            r[static_cast<size_t>(*nil)] = 0;
            t.emplace(std::move(r), c);
        }
    }
    return detail::RawOps::to_elem(ring_, std::move(t));
}

DefRingElem DefRingElem::nilpotent_free_part() const {
    const std::optional<int> nil = ring_->nilpotent_index();
    if (!nil) return *this;
    TermMap t;
    for (const auto& [e, c] : terms_)
        if (e[static_cast<size_t>(*nil)] == 0) t.emplace(e, c);
    return detail::RawOps::to_elem(ring_, std::move(t));
}

Rational DefRingElem::coeff(const std::vector<std::pair<std::string, int>>& powers) const {
    Exponents e(static_cast<size_t>(ring_->arity()), 0);
    for (const auto& [name, p] : powers) e[static_cast<size_t>(ring_->index_of(name))] += p;
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool DefRingElem::operator==(const DefRingElem& o) const {
    if (ring_ != o.ring_ && !ring_->same_universe(*o.ring_)) return false;
    return terms_ == o.terms_;
}

std::string DefRingElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool printed = false;
        if (abs != Rational(1) || all_zero) {
            os << abs.str();
            printed = true;
        }
        for (int i = 0; i < ring_->arity(); ++i) {
            const int p = e[static_cast<size_t>(i)];
            if (p == 0) continue;
            if (printed) os << "*";
            os << ring_->var(i).name;
            if (p != 1) os << "^" << p;
            printed = true;
        }
    }
    return os.str();
}

namespace detail {

RawOps::Terms RawOps::add(const Terms& a, const Terms& b) {
    Terms r = a;
    for (const auto& [e, c] : b) {
        auto [it, inserted] = r.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

RawOps::Terms RawOps::negate(Terms a) {
    for (auto& [e, c] : a) c = -c;
    return a;
}

RawOps::Terms RawOps::mul(const Terms& a, const Terms& b) {
    Terms r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            DefRingElem::Exponents e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            Rational c = ca * cb;
            auto [it, inserted] = r.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return r;
}

RawOps::Terms RawOps::div_nilpotent(const DefRing& ring, const Terms& a) {
    const std::optional<int> nil = ring.nilpotent_index();
    if (!nil) throw std::logic_error("div_nilpotent: ring has no nilpotent variable");
    Terms r;
    for (const auto& [e, c] : a) {
        if (e[static_cast<size_t>(*nil)] < 1)
            throw std::domain_error("div_nilpotent: term not divisible by the nilpotent variable");
        DefRingElem::Exponents d = e;
        d[static_cast<size_t>(*nil)] -= 1;
        r.emplace(std::move(d), c);
    }
    return r;
}

DefRingElem RawOps::to_elem(DefRingPtr ring, Terms t) {
    return DefRingElem(std::move(ring), std::move(t));
}

}  // namespace detail

}  // namespace moduli
