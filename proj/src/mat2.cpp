#include "moduli/mat2.hpp"

#include <sstream>

namespace moduli {

Mat2 Mat2::identity(const DefRingPtr& ring) {
    DefRingElem one = DefRingElem::constant(ring, 1);
    DefRingElem zero = DefRingElem::zero(ring);
    return {one, zero, zero, one};
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 Mat2::scaled(const DefRingElem& s) const { return {s * a, s * b, s * c, s * d}; }

Mat2 Mat2::inverse() const {
    DefRingElem det_inv = det().inv();  // NotAUnit propagates
    return adjugate().scaled(det_inv);
}

Mat2 Mat2::subst(std::string_view var, const DefRingElem& value) const {
    return {a.subst(var, value), b.subst(var, value), c.subst(var, value), d.subst(var, value)};
}

Mat2 Mat2::nilpotent_coefficient() const {
    return {a.nilpotent_coefficient(), b.nilpotent_coefficient(),
            c.nilpotent_coefficient(), d.nilpotent_coefficient()};
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "((" << a.str() << ", " << b.str() << "), (" << c.str() << ", " << d.str() << "))";
    return os.str();
}

Mat2 gauge_pair(const Mat2& g, const Mat2& frame_src, const Mat2& frame_tgt) {
    return frame_tgt.inverse() * g * frame_src;
}

namespace {

using detail::RawOps;
using Terms = RawOps::Terms;

struct RawMat {
    Terms a, b, c, d;
};

RawMat to_raw(const Mat2& m) {
    return {RawOps::terms(m.a), RawOps::terms(m.b), RawOps::terms(m.c), RawOps::terms(m.d)};
}

RawMat raw_mul(const RawMat& m, const RawMat& n) {
    return {RawOps::add(RawOps::mul(m.a, n.a), RawOps::mul(m.b, n.c)),
            RawOps::add(RawOps::mul(m.a, n.b), RawOps::mul(m.b, n.d)),
            RawOps::add(RawOps::mul(m.c, n.a), RawOps::mul(m.d, n.c)),
            RawOps::add(RawOps::mul(m.c, n.b), RawOps::mul(m.d, n.d))};
}

}  // namespace

Mat2 degenerate_gauge_pair(const Mat2& g, const Mat2& frame_src, const Mat2& frame_tgt) {
    const DefRingPtr& ring = g.ring();

    // det(frame_tgt) = z * unit, kept exact so the z-division below sees it.
    Terms det_raw = RawOps::add(RawOps::mul(RawOps::terms(frame_tgt.a), RawOps::terms(frame_tgt.d)),
                                RawOps::negate(RawOps::mul(RawOps::terms(frame_tgt.b),
                                                           RawOps::terms(frame_tgt.c))));
    DefRingElem unit_part = RawOps::to_elem(ring, RawOps::div_nilpotent(*ring, det_raw));
    DefRingElem unit_inv = unit_part.inv();  // NotAUnit if the frame is not of this shape

    RawMat m = raw_mul(raw_mul(to_raw(frame_tgt.adjugate()), to_raw(g)), to_raw(frame_src));
    Mat2 q{RawOps::to_elem(ring, RawOps::div_nilpotent(*ring, m.a)),
           RawOps::to_elem(ring, RawOps::div_nilpotent(*ring, m.b)),
           RawOps::to_elem(ring, RawOps::div_nilpotent(*ring, m.c)),
           RawOps::to_elem(ring, RawOps::div_nilpotent(*ring, m.d))};
    return q.scaled(unit_inv);
}

TransitionData::TransitionData(int charts, std::map<std::pair<int, int>, Mat2> transitions)
    : charts_(charts), g_(std::move(transitions)) {
    if (charts_ < 2) throw std::invalid_argument("TransitionData: need at least 2 charts");
    for (int i = 1; i <= charts_; ++i)
        for (int j = 1; j <= charts_; ++j)
            if (i != j && g_.find({i, j}) == g_.end())
                throw std::invalid_argument("TransitionData: missing transition (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
}

const Mat2& TransitionData::at(int i, int j) const {
    auto it = g_.find({i, j});
    if (it == g_.end())
        throw std::out_of_range("TransitionData: no transition (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
    return it->second;
}

bool cocycle_check(const TransitionData& T) {
    const int n = T.charts();
    const Mat2 id = Mat2::identity(T.at(1, 2).ring());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (T.at(j, i) * T.at(i, j) != id) return false;
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (T.at(j, k) * T.at(i, j) != T.at(i, k)) return false;
            }
    return true;
}

namespace {

template <typename PairOp>
TransitionData transform_with(const TransitionData& T, const std::vector<Mat2>& frames, PairOp op) {
    if (static_cast<int>(frames.size()) != T.charts())
        throw std::invalid_argument("gauge_transform: one frame per chart required");
    std::map<std::pair<int, int>, Mat2> out;
    for (const auto& [ij, g] : T.transitions()) {
        const Mat2& src = frames[static_cast<size_t>(ij.first - 1)];
        const Mat2& tgt = frames[static_cast<size_t>(ij.second - 1)];
        out.emplace(ij, op(g, src, tgt));
    }
    return TransitionData(T.charts(), std::move(out));
}

}  // namespace

TransitionData gauge_transform(const TransitionData& T, const std::vector<Mat2>& frames) {
    return transform_with(T, frames, [](const Mat2& g, const Mat2& s, const Mat2& t) {
        return gauge_pair(g, s, t);
    });
}

TransitionData degenerate_gauge_transform(const TransitionData& T, const std::vector<Mat2>& frames) {
    return transform_with(T, frames, [](const Mat2& g, const Mat2& s, const Mat2& t) {
        return degenerate_gauge_pair(g, s, t);
    });
}

TransitionData coboundary_transitions(const std::vector<Mat2>& frames) {
    const int n = static_cast<int>(frames.size());
    if (n < 2) throw std::invalid_argument("coboundary_transitions: need at least 2 frames");
    std::map<std::pair<int, int>, Mat2> out;
    std::vector<Mat2> inverses;
    inverses.reserve(frames.size());
    for (const Mat2& f : frames) inverses.push_back(f.inverse());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                out.emplace(std::make_pair(i, j),
                            inverses[static_cast<size_t>(j - 1)] * frames[static_cast<size_t>(i - 1)]);
    return TransitionData(n, std::move(out));
}

ExtensionCochain extension_class(const TransitionData& T) {
    ExtensionCochain out;
    for (const auto& [ij, g] : T.transitions()) {
        if (!g.is_upper_triangular())
            throw std::invalid_argument("extension_class: transition (" + std::to_string(ij.first) +
                                        ", " + std::to_string(ij.second) + ") is not upper-triangular");
        out.mu.emplace(ij, g.d.inv() * g.b);
    }
    return out;
}

std::uint64_t Rng::next() {
    // splitmix64; fixed here so seeded runs reproduce everywhere.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Rng::rational(long max_abs_num, long max_den) {
    return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
}

Rational Rng::nonzero_rational(long max_abs_num, long max_den) {
    for (;;) {
        Rational r = rational(max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

Mat2 random_unit_frame(const DefRingPtr& ring, Rng& rng) {
    // Invertible constant part: pick entries until the determinant is nonzero.
    Rational p, q, r, s;
    do {
        p = rng.rational();
        q = rng.rational();
        r = rng.rational();
        s = rng.rational();
    } while ((p * s - q * r).is_zero());

    auto cst = [&](const Rational& x) { return DefRingElem::constant(ring, x); };
    Mat2 base{cst(p), cst(q), cst(r), cst(s)};

    // Times (1 + z N) and a power of the first invertible variable, if any.
    DefRingElem z = DefRingElem::zero(ring);
    if (ring->nilpotent_index())
        z = DefRingElem::variable(ring, ring->var(*ring->nilpotent_index()).name);
    Mat2 noise{cst(1) + z * cst(rng.rational()), z * cst(rng.rational()),
               z * cst(rng.rational()), cst(1) + z * cst(rng.rational())};
    Mat2 out = base * noise;

    for (int i = 0; i < ring->arity(); ++i) {
        if (ring->var(i).invertible) {
            long e = rng.uniform(-1, 1);
            if (e != 0) {
                DefRingElem u = DefRingElem::monomial(ring, {{ring->var(i).name, static_cast<int>(e)}});
                out = out.scaled(u);
            }
            break;
        }
    }
    return out;
}

Mat2 random_matrix(const DefRingPtr& ring, Rng& rng) {
    DefRingElem z = DefRingElem::zero(ring);
    if (ring->nilpotent_index())
        z = DefRingElem::variable(ring, ring->var(*ring->nilpotent_index()).name);
    auto entry = [&] {
        return DefRingElem::constant(ring, rng.rational()) +
               z * DefRingElem::constant(ring, rng.rational());
    };
    return {entry(), entry(), entry(), entry()};
}

}  // namespace moduli
