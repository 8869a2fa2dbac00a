#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/rational.hpp"

namespace moduli {

// A formal variable of the truncated deformation ring. Invertible variables
// admit negative exponents (Laurent-style); the single nilpotent variable
// squares to zero. A variable cannot be both.
struct DefVar {
    std::string name;
    bool invertible = false;
    std::optional<int> nilpotent_order;  // only order 2 is supported
};

// Immutable variable universe shared by ring elements.
class DefRing {
public:
    explicit DefRing(std::vector<DefVar> vars);

    int arity() const { return static_cast<int>(vars_.size()); }
    const DefVar& var(int i) const { return vars_.at(static_cast<size_t>(i)); }
    int index_of(std::string_view name) const;
    std::optional<int> nilpotent_index() const { return nilpotent_; }

    bool same_universe(const DefRing& o) const;

private:
    std::vector<DefVar> vars_;
    std::optional<int> nilpotent_;
};

using DefRingPtr = std::shared_ptr<const DefRing>;

DefRingPtr make_ring(std::vector<DefVar> vars);

namespace detail {
struct RawOps;
}

// Element of the deformation ring in canonical normal form: a map from
// exponent vectors to nonzero rational coefficients, with monomials containing
// the square of the nilpotent variable dropped. Negative exponents are only
// permitted on invertible variables. Immutable value semantics throughout.
class DefRingElem {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    static DefRingElem zero(DefRingPtr ring);
    static DefRingElem constant(DefRingPtr ring, const Rational& c);
    static DefRingElem variable(DefRingPtr ring, std::string_view name);
    static DefRingElem monomial(DefRingPtr ring,
                                const std::vector<std::pair<std::string, int>>& powers,
                                const Rational& coeff = Rational(1));

    const DefRingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }

    friend DefRingElem operator+(const DefRingElem& a, const DefRingElem& b);
    friend DefRingElem operator-(const DefRingElem& a, const DefRingElem& b);
    friend DefRingElem operator*(const DefRingElem& a, const DefRingElem& b);
    friend DefRingElem operator*(const Rational& s, const DefRingElem& a);
    DefRingElem operator-() const;
    DefRingElem pow(unsigned k) const;

    // Multiplicative inverse of u*(1+n) with u a single monomial in invertible
    // variables and n nilpotent; throws NotAUnit for any other shape.
    DefRingElem inv() const;

    // Substitute a non-invertible variable by an arbitrary element.
    DefRingElem subst(std::string_view var, const DefRingElem& value) const;

    // Evaluation at var = 0: keeps the terms free of the variable. Defined for
    // any variable as long as the element carries no negative powers of it.
    DefRingElem at_zero(std::string_view var) const;

    // Decomposition e = e0 + z*e1 along the nilpotent variable.
    DefRingElem nilpotent_coefficient() const;  // e1
    DefRingElem nilpotent_free_part() const;    // e0

    Rational coeff(const std::vector<std::pair<std::string, int>>& powers) const;

    bool operator==(const DefRingElem& o) const;
    bool operator!=(const DefRingElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    DefRingElem(DefRingPtr ring, TermMap terms);
    void normalize();
    static void require_compatible(const DefRingElem& a, const DefRingElem& b);

    DefRingPtr ring_;
    TermMap terms_;

    friend struct detail::RawOps;
};

namespace detail {

// Exact-arithmetic access for the composite frame modification, where
// intermediate products must keep powers of the nilpotent variable beyond the
// truncation order until an exact division brings them back in range.
struct RawOps {
    using Terms = DefRingElem::TermMap;

    static const Terms& terms(const DefRingElem& e) { return e.terms_; }
    static Terms add(const Terms& a, const Terms& b);
    static Terms negate(Terms a);
    static Terms mul(const Terms& a, const Terms& b);
    // Divide every monomial by the nilpotent variable once; throws
    // std::domain_error if some monomial is free of it.
    static Terms div_nilpotent(const DefRing& ring, const Terms& a);
    // Reinstate the normal form (drops z^2 and zero coefficients).
    static DefRingElem to_elem(DefRingPtr ring, Terms t);
};

}  // namespace detail

}  // namespace moduli
