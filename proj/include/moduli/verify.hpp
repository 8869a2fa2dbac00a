#pragma once

#include <string>
#include <vector>

#include "moduli/pipeline.hpp"

namespace moduli {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyReport {
    int genus = 0;
    std::vector<CheckResult> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Exact rational-function identity f(t) == t^d f(1/t).
bool check_duality_rf(const RatFunc& f, int d);

// Integrality, nonnegativity, b0 = 1, b1 = 0, degree == dim, palindrome.
std::vector<CheckResult> check_betti_sanity(const Poly& p, int dim);

struct VerifyOptions {
    // Fault injection: perturb one coefficient of the third closed-form term,
    // proving the suite is non-vacuous.
    bool corrupt_term3 = false;
};

// Runs every cross-route identity at one genus: closed form vs blow-down,
// both blow-up corrections, the alternate P(N) route, per-term duality,
// the Grassmannian product formula, and Betti sanity for all three spaces.
VerifyReport cross_check_all(const GenusConfig& cfg, const VerifyOptions& opts = {});

}  // namespace moduli
