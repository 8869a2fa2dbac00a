#include "moduli/modification.hpp"

namespace moduli {

namespace {

DefRingElem cst(const DefRingPtr& ring, long v) { return DefRingElem::constant(ring, Rational(v)); }
DefRingElem var(const DefRingPtr& ring, const std::string& name) {
    return DefRingElem::variable(ring, name);
}
DefRingElem inv_var(const DefRingPtr& ring, const std::string& name) {
    return DefRingElem::monomial(ring, {{name, -1}});
}

// ((lambda, z b), (z c, lambda^{-1})) for a named symbol triple.
Mat2 deformation_pair(const DefRingPtr& ring, const std::string& lam, const std::string& b,
                      const std::string& c) {
    DefRingElem z = var(ring, "z");
    return {var(ring, lam), z * var(ring, b), z * var(ring, c), inv_var(ring, lam)};
}

// ((1 + z a, z b), (z c, 1 - z a)): the family over the deepest stratum.
Mat2 deepest_pair(const DefRingPtr& ring, const std::string& a, const std::string& b,
                  const std::string& c) {
    DefRingElem z = var(ring, "z");
    DefRingElem one = cst(ring, 1);
    return {one + z * var(ring, a), z * var(ring, b), z * var(ring, c), one - z * var(ring, a)};
}

// Frames of the divisor modification: sections (z f, g) on chart 1 and
// (z f - t g, g) elsewhere.
Mat2 divisor_frame_first(const DefRingPtr& ring) {
    return {var(ring, "z"), DefRingElem::zero(ring), DefRingElem::zero(ring), cst(ring, 1)};
}
Mat2 divisor_frame_other(const DefRingPtr& ring) {
    return {var(ring, "z"), -var(ring, "t"), DefRingElem::zero(ring), cst(ring, 1)};
}

// The composite of the point and divisor modifications for the V_1 -> V_j
// transition of the deepest-stratum family.
Mat2 combined_transition(const DefRingPtr& ring) {
    Mat2 g = deepest_pair(ring, "a", "b", "c");
    Mat2 step1 = gauge_pair(g, point_frame(ring), Mat2::identity(ring));
    return degenerate_gauge_pair(step1, divisor_frame_first(ring), divisor_frame_other(ring));
}

}  // namespace

Mat2 point_frame(const DefRingPtr& ring) {
    return {var(ring, "zeta"), -var(ring, "t"), DefRingElem::zero(ring), cst(ring, 1)};
}

PointModificationCheck check_point_modification() {
    DefRingPtr ring = make_ring({{"zeta", true, {}},
                                 {"z", false, 2},
                                 {"t", false, {}},
                                 {"lam", true, {}},
                                 {"b", false, {}},
                                 {"c", false, {}},
                                 {"lam2", true, {}},
                                 {"b2", false, {}},
                                 {"c2", false, {}}});
    DefRingElem z = var(ring, "z"), t = var(ring, "t"), zeta = var(ring, "zeta");
    Mat2 id = Mat2::identity(ring);
    Mat2 frame = point_frame(ring);

    PointModificationCheck out{
        gauge_pair(deformation_pair(ring, "lam", "b", "c"), frame, id),
        {zeta * var(ring, "lam"), z * var(ring, "b") - t * var(ring, "lam"),
         zeta * z * var(ring, "c"), -(z * t * var(ring, "c")) + inv_var(ring, "lam")},
        gauge_pair(deformation_pair(ring, "lam2", "b2", "c2"), id, frame),
        {inv_var(ring, "zeta") * (var(ring, "lam2") + z * t * var(ring, "c2")),
         inv_var(ring, "zeta") * (z * var(ring, "b2") + t * inv_var(ring, "lam2")),
         z * var(ring, "c2"), inv_var(ring, "lam2")}};
    return out;
}

CombinedModificationCheck check_combined_modification() {
    DefRingPtr ring = make_ring(
        {{"zeta", true, {}}, {"z", false, 2}, {"t", false, {}}, {"a", false, {}}, {"b", false, {}}, {"c", false, {}}});
    DefRingElem z = var(ring, "z"), t = var(ring, "t"), zeta = var(ring, "zeta");
    DefRingElem a = var(ring, "a"), b = var(ring, "b"), c = var(ring, "c");
    DefRingElem one = cst(ring, 1), nil = DefRingElem::zero(ring);

    CombinedModificationCheck out{
        combined_transition(ring),
        {zeta * (one + z * a + z * t * c), b - 2 * Rational(1) * t * a - t * t * c, nil,
         one - z * a - z * t * c},
        Mat2{nil, nil, nil, nil}, Mat2{nil, nil, nil, nil},
        Mat2{nil, nil, nil, nil}, Mat2{nil, nil, nil, nil}};
    out.derived_z0 = out.derived.subst("z", nil);
    out.expected_z0 = {zeta, b - 2 * Rational(1) * t * a - t * t * c, nil, one};
    out.derived_origin = out.derived.subst("a", nil).subst("b", nil).subst("c", nil);
    out.expected_origin = {zeta, nil, nil, one};
    return out;
}

bool ExtensionPencilCheck::ok() const {
    DefRingElem tau = DefRingElem::variable(ring, "tau");
    for (const auto& cs : cases) {
        if (cs.mu_tau != cs.expected_tau) return false;
        if (cs.mu_tau != cs.mu_zero + tau * cs.mu_infty) return false;
        if (cs.mu_zero != cs.mu_tau.subst("tau", DefRingElem::zero(ring))) return false;
    }
    return true;
}

ExtensionPencilCheck check_extension_class_pencil() {
    std::vector<DefVar> vars = {{"zeta", true, {}}, {"z", false, 2}, {"t", false, {}}, {"tau", false, {}}};
    for (const char* p : {"12", "13", "21", "31", "23", "32"}) {
        vars.push_back({std::string("lam") + p, true, {}});
        vars.push_back({std::string("b") + p, false, {}});
        vars.push_back({std::string("c") + p, false, {}});
    }
    DefRingPtr ring = make_ring(std::move(vars));

    DefRingElem z = var(ring, "z"), tau = var(ring, "tau");
    DefRingElem zeta_inv = inv_var(ring, "zeta");
    Mat2 id = Mat2::identity(ring);
    Mat2 frame = point_frame(ring);
    Mat2 rdiv = divisor_frame_first(ring);  // sections (z f, g) on every chart here

    auto lam = [&](const char* p) { return var(ring, std::string("lam") + p); };
    auto lam_inv = [&](const char* p) { return inv_var(ring, std::string("lam") + p); };
    auto bsym = [&](const char* p) { return var(ring, std::string("b") + p); };

    // Derive each ordered chart pair through the machinery: the point
    // modification touches only transitions into or out of chart 1; the line
    // t = tau z is substituted before modifying along the divisor.
    auto derive = [&](const char* p, bool from_first, bool to_first) {
        Mat2 g = deformation_pair(ring, std::string("lam") + p, std::string("b") + p,
                                  std::string("c") + p);
        Mat2 step1 = gauge_pair(g, from_first ? frame : id, to_first ? frame : id);
        Mat2 on_line = step1.subst("t", tau * z);
        return degenerate_gauge_pair(on_line, rdiv, rdiv);
    };

    std::map<std::pair<int, int>, Mat2> m;
    m.emplace(std::make_pair(1, 2), derive("12", true, false));
    m.emplace(std::make_pair(1, 3), derive("13", true, false));
    m.emplace(std::make_pair(2, 1), derive("21", false, true));
    m.emplace(std::make_pair(3, 1), derive("31", false, true));
    m.emplace(std::make_pair(2, 3), derive("23", false, false));
    m.emplace(std::make_pair(3, 2), derive("32", false, false));
    TransitionData family(3, std::move(m));

    ExtensionCochain mu = extension_class(family);

    ExtensionPencilCheck out;
    out.ring = ring;
    auto add_case = [&](const std::string& name, std::pair<int, int> ij,
                        const DefRingElem& expected_tau, const DefRingElem& mu_infty) {
        const DefRingElem& derived = mu.mu.at(ij);
        out.cases.push_back({name, derived, expected_tau,
                             derived.subst("tau", DefRingElem::zero(ring)), mu_infty});
    };

    add_case("first_to_other", {1, 2}, lam("12") * (bsym("12") - tau * lam("12")),
             -(lam("12") * lam("12")));
    add_case("first_to_other", {1, 3}, lam("13") * (bsym("13") - tau * lam("13")),
             -(lam("13") * lam("13")));
    add_case("other_to_first", {2, 1}, zeta_inv * lam("21") * (bsym("21") + tau * lam_inv("21")),
             zeta_inv);
    add_case("other_to_first", {3, 1}, zeta_inv * lam("31") * (bsym("31") + tau * lam_inv("31")),
             zeta_inv);
    add_case("interior", {2, 3}, lam("23") * bsym("23"), DefRingElem::zero(ring));
    add_case("interior", {3, 2}, lam("32") * bsym("32"), DefRingElem::zero(ring));
    return out;
}

ConicClasses conic_classes() {
    DefRingPtr ring = make_ring({{"zeta", true, {}},
                                 {"z", false, 2},
                                 {"t", false, {}},
                                 {"s", true, {}},
                                 {"a", false, {}},
                                 {"b", false, {}},
                                 {"c", false, {}}});
    Mat2 combined = combined_transition(ring);
    Mat2 at_z0 = combined.subst("z", DefRingElem::zero(ring));
    std::map<std::pair<int, int>, Mat2> m;
    m.emplace(std::make_pair(1, 2), at_z0);
    m.emplace(std::make_pair(2, 1), at_z0.inverse());
    TransitionData family(2, std::move(m));
    ExtensionCochain mu = extension_class(family);

    DefRingElem s = var(ring, "s");
    DefRingElem affine_s =
        s * s * var(ring, "b") - 2 * Rational(1) * s * var(ring, "a") - var(ring, "c");
    return {ring, mu.mu.at({1, 2}), affine_s};
}

DefRingElem conic_class(ConicChart chart) {
    ConicClasses c = conic_classes();
    return chart == ConicChart::AffineT ? c.affine_t : c.affine_s;
}

bool check_conic_chart_consistency() {
    ConicClasses c = conic_classes();
    DefRingElem s = DefRingElem::variable(c.ring, "s");
    DefRingElem rescaled = s * s * c.affine_t.subst("t", inv_var(c.ring, "s"));
    return rescaled == c.affine_s;
}

std::map<std::pair<int, int>, Mat2> first_order_variation(const TransitionData& T) {
    std::map<std::pair<int, int>, Mat2> out;
    for (const auto& [ij, g] : T.transitions()) out.emplace(ij, g.nilpotent_coefficient());
    return out;
}

FirstOrderVariationCheck check_first_order_variation() {
    DefRingPtr ring = make_ring(
        {{"zeta", true, {}}, {"z", false, 2}, {"t", false, {}}, {"a", false, {}}, {"b", false, {}}, {"c", false, {}}});
    DefRingElem z = var(ring, "z"), t = var(ring, "t"), zeta = var(ring, "zeta");
    DefRingElem a = var(ring, "a"), c = var(ring, "c");
    DefRingElem nil = DefRingElem::zero(ring);

    // Tilt the combined deformation into the divisor direction.
    Mat2 tilted = combined_transition(ring).subst("a", z * a);
    std::map<std::pair<int, int>, Mat2> m;
    m.emplace(std::make_pair(1, 2), tilted);
    m.emplace(std::make_pair(2, 1), tilted.inverse());
    TransitionData family(2, std::move(m));

    auto variation = first_order_variation(family);

    FirstOrderVariationCheck out{variation.at({1, 2}),
                                 {t * zeta * c, -(2 * Rational(1) * t * a), nil, -(t * c)},
                                 Mat2{nil, nil, nil, nil}, Mat2{nil, nil, nil, nil},
                                 Mat2{nil, nil, nil, nil}};
    out.variation_t0 = out.variation.subst("t", nil);
    out.variation_c0 = out.variation.subst("c", nil);
    out.expected_c0 = {nil, -(2 * Rational(1) * t * a), nil, nil};
    return out;
}

bool FirstOrderVariationCheck::ok() const {
    const DefRingPtr& ring = variation.ring();
    Mat2 zero{DefRingElem::zero(ring), DefRingElem::zero(ring), DefRingElem::zero(ring),
              DefRingElem::zero(ring)};
    return variation == expected && variation_t0 == zero && variation_c0 == expected_c0;
}

CocycleReport cocycle_suite(std::uint64_t seed, int charts, int instances) {
    if (charts < 2) throw std::invalid_argument("cocycle_suite: need at least 2 charts");
    CocycleReport report;
    report.seed = seed;
    report.charts = charts;

    report.checks.push_back({"point_modification", check_point_modification().ok(), ""});
    {
        auto c = check_combined_modification();
        report.checks.push_back({"combined_modification", c.derived == c.expected, ""});
        report.checks.push_back({"combined_modification_z0", c.derived_z0 == c.expected_z0, ""});
        report.checks.push_back(
            {"combined_modification_origin", c.derived_origin == c.expected_origin, ""});
    }
    report.checks.push_back({"extension_class_pencil", check_extension_class_pencil().ok(), ""});
    report.checks.push_back({"conic_chart_consistency", check_conic_chart_consistency(), ""});
    report.checks.push_back({"first_order_variation", check_first_order_variation().ok(), ""});

    DefRingPtr ring = make_ring({{"zeta", true, {}}, {"z", false, 2}});
    Rng rng(seed);
    int coboundary_ok = 0, gauge_ok = 0, random_rejected = 0;
    for (int inst = 0; inst < instances; ++inst) {
        std::vector<Mat2> frames, second;
        for (int i = 0; i < charts; ++i) frames.push_back(random_unit_frame(ring, rng));
        for (int i = 0; i < charts; ++i) second.push_back(random_unit_frame(ring, rng));

        TransitionData T = coboundary_transitions(frames);
        if (cocycle_check(T)) ++coboundary_ok;
        if (cocycle_check(gauge_transform(T, second))) ++gauge_ok;

        std::map<std::pair<int, int>, Mat2> noise;
        for (int i = 1; i <= charts; ++i)
            for (int j = 1; j <= charts; ++j)
                if (i != j) noise.emplace(std::make_pair(i, j), random_matrix(ring, rng));
        if (!cocycle_check(TransitionData(charts, std::move(noise)))) ++random_rejected;
    }
    auto tally = [&](int got) {
        return std::to_string(got) + "/" + std::to_string(instances) + " instances";
    };
    report.checks.push_back({"coboundary_is_cocycle", coboundary_ok == instances, tally(coboundary_ok)});
    report.checks.push_back({"gauge_preserves_cocycle", gauge_ok == instances, tally(gauge_ok)});
    report.checks.push_back(
        {"random_family_rejected", random_rejected == instances, tally(random_rejected)});
    return report;
}

}  // namespace moduli
