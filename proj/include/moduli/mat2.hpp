#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "moduli/defring.hpp"

namespace moduli {

// 2x2 matrix over the deformation ring, row-major ((a, b), (c, d)).
struct Mat2 {
    DefRingElem a, b, c, d;

    static Mat2 identity(const DefRingPtr& ring);
    static Mat2 diag(const DefRingElem& x, const DefRingElem& y) { return {x, zero_like(x), zero_like(x), y}; }

    const DefRingPtr& ring() const { return a.ring(); }

    friend Mat2 operator*(const Mat2& m, const Mat2& n);
    Mat2 scaled(const DefRingElem& s) const;

    DefRingElem det() const { return a * d - b * c; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    // Adjugate over determinant; the determinant must be a unit.
    Mat2 inverse() const;

    Mat2 subst(std::string_view var, const DefRingElem& value) const;
    Mat2 nilpotent_coefficient() const;

    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    bool is_upper_triangular() const { return c.is_zero(); }

    std::string str() const;

private:
    static DefRingElem zero_like(const DefRingElem& e) { return DefRingElem::zero(e.ring()); }
};

// Frame change of a single transition g: V_src -> V_tgt under new frames
// B_src, B_tgt (each mapping new-frame coordinates to old ones):
//   g' = B_tgt^{-1} g B_src.
// B_tgt must have unit determinant in the ring.
Mat2 gauge_pair(const Mat2& g, const Mat2& frame_src, const Mat2& frame_tgt);

// The same frame change when the target frame is degenerate with determinant
// z * unit (z the nilpotent variable): the quotient B_tgt^{-1} g B_src is
// computed with exact intermediate arithmetic, divided by z exactly per the
// recovery-multiplier convention, and reduced back to the z^2 = 0 normal form.
// Throws if some entry is not divisible as required.
Mat2 degenerate_gauge_pair(const Mat2& g, const Mat2& frame_src, const Mat2& frame_tgt);

// Transition matrices g_{ij}: V_i-frame coordinates -> V_j-frame coordinates
// over a finite chart nerve, indexed by ordered pairs (i, j), 1-based.
class TransitionData {
public:
    TransitionData(int charts, std::map<std::pair<int, int>, Mat2> transitions);

    int charts() const { return charts_; }
    const Mat2& at(int i, int j) const;
    const std::map<std::pair<int, int>, Mat2>& transitions() const { return g_; }

private:
    int charts_;
    std::map<std::pair<int, int>, Mat2> g_;
};

// Pair and triple conditions modulo z^2:
//   g_{ji} g_{ij} = 1 and g_{jk} g_{ij} = g_{ik}.
bool cocycle_check(const TransitionData& T);

// Frame change across the whole nerve: g'_{ij} = B_j^{-1} g_{ij} B_i.
// Every frame must have unit determinant; degenerate frames belong to
// degenerate_gauge_transform.
TransitionData gauge_transform(const TransitionData& T, const std::vector<Mat2>& frames);

// Frame change where every frame has determinant z * unit.
TransitionData degenerate_gauge_transform(const TransitionData& T, const std::vector<Mat2>& frames);

// The coboundary family g_{ij} = B_j^{-1} B_i, a cocycle by construction.
TransitionData coboundary_transitions(const std::vector<Mat2>& frames);

// Cochain of extension classes of an upper-triangular family
// ((lambda, u), (0, d)): mu_{ij} = d^{-1} u per ordered pair.
struct ExtensionCochain {
    std::map<std::pair<int, int>, DefRingElem> mu;
};

ExtensionCochain extension_class(const TransitionData& T);

// Minimal deterministic generator: raw mt19937_64 draws reduced by hand so
// reports reproduce byte-for-byte across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform integer in [lo, hi]
    long uniform(long lo, long hi);
    Rational rational(long max_abs_num = 5, long max_den = 3);
    Rational nonzero_rational(long max_abs_num = 5, long max_den = 3);

private:
    std::uint64_t state_;
};

// Random frame with unit determinant: an invertible rational matrix times
// (1 + z N), optionally scaled by a power of an invertible variable.
Mat2 random_unit_frame(const DefRingPtr& ring, Rng& rng);

// Unconstrained random matrix (entries rational + rational * z).
Mat2 random_matrix(const DefRingPtr& ring, Rng& rng);

}  // namespace moduli
