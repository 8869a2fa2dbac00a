// Command-line front end: Betti tables of the three desingularizations and the
// verification suites, emitted as JSON, CSV or plain text.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "moduli/modification.hpp"
#include "moduli/pipeline.hpp"
#include "moduli/verify.hpp"

using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitIo = 4;

int max_genus_cap() {
    if (const char* env = std::getenv("MODULI_BETTI_MAX_GENUS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 3) return cap;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid MODULI_BETTI_MAX_GENUS='" << env << "'\n";
    }
    return 20;
}

json record_json(const moduli::BettiTable& t) {
    return json{{"tool_version", kToolVersion},
                {"genus", t.genus},
                {"space", moduli::space_name(t.space)},
                {"dim", t.dim},
                {"betti", t.betti},
                {"euler", t.euler},
                {"duality_ok", t.duality_ok}};
}

std::string record_csv(const moduli::BettiTable& t) {
    std::ostringstream os;
    os << "k,b_k\n";
    for (size_t k = 0; k < t.betti.size(); ++k) os << k << "," << t.betti[k] << "\n";
    return os.str();
}

std::string record_text(const moduli::BettiTable& t) {
    std::ostringstream os;
    os << "space " << moduli::space_name(t.space) << ", genus " << t.genus << ", dimension "
       << t.dim << "\n";
    os << "betti:";
    for (long long b : t.betti) os << " " << b;
    os << "\neuler " << t.euler << ", duality " << (t.duality_ok ? "yes" : "no") << "\n";
    return os.str();
}

// Writes to the path when given, stdout otherwise; exits 4 on I/O failure.
int emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    f << payload;
    f.flush();
    if (!f) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return kExitIo;
    }
    return 0;
}

int run_betti(int genus, const std::string& space_arg, const std::string& format,
              const std::string& out_path) {
    if (genus < 3) {
        std::cerr << "error: genus must be >= 3\n";
        return kExitUsage;
    }
    if (genus > max_genus_cap()) {
        std::cerr << "error: genus exceeds the cap " << max_genus_cap()
                  << " (override with MODULI_BETTI_MAX_GENUS)\n";
        return kExitUsage;
    }
    moduli::Space space;
    try {
        space = moduli::space_from_name(space_arg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    moduli::BettiTable t = moduli::betti_table(moduli::GenusConfig(genus), space);
    std::string payload;
    if (format == "json")
        payload = record_json(t).dump() + "\n";
    else if (format == "csv")
        payload = record_csv(t);
    else if (format == "text")
        payload = record_text(t);
    else {
        std::cerr << "error: unknown format '" << format << "' (expected json, csv or text)\n";
        return kExitUsage;
    }
    return emit(out_path, payload);
}

int run_table(int lo, int hi, const std::string& out_path) {
    if (lo < 3 || hi < lo) {
        std::cerr << "error: need 3 <= genus-lo <= genus-hi\n";
        return kExitUsage;
    }
    if (hi > max_genus_cap()) {
        std::cerr << "error: genus-hi exceeds the cap " << max_genus_cap()
                  << " (override with MODULI_BETTI_MAX_GENUS)\n";
        return kExitUsage;
    }
    // Genera are independent; compute them concurrently and assemble in order.
    std::vector<std::future<std::string>> rows;
    for (int g = lo; g <= hi; ++g) {
        rows.push_back(std::async(std::launch::async, [g] {
            std::ostringstream os;
            moduli::GenusConfig cfg(g);
            for (moduli::Space s : {moduli::Space::M2, moduli::Space::K, moduli::Space::N}) {
                moduli::BettiTable t = moduli::betti_table(cfg, s);
                for (size_t k = 0; k < t.betti.size(); ++k)
                    os << g << "," << moduli::space_name(s) << "," << k << "," << t.betti[k] << "\n";
            }
            return os.str();
        }));
    }
    std::string payload = "genus,space,k,b_k\n";
    for (auto& r : rows) payload += r.get();
    return emit(out_path, payload);
}

int run_verify(int genus, const std::string& format, bool inject_fault) {
    if (genus < 3) {
        std::cerr << "error: genus must be >= 3\n";
        return kExitUsage;
    }
    moduli::VerifyOptions opts;
    opts.corrupt_term3 = inject_fault;
    moduli::VerifyReport report = moduli::cross_check_all(moduli::GenusConfig(genus), opts);

    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json doc{{"tool_version", kToolVersion},
                 {"genus", report.genus},
                 {"overall", report.overall()},
                 {"checks", checks}};
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << (report.overall() ? "OK" : "FAILED") << " genus " << report.genus << "\n";
    }
    return report.overall() ? 0 : kExitVerification;
}

int run_cocycle(std::uint64_t seed, int charts, const std::string& format) {
    if (charts < 2) {
        std::cerr << "error: need at least 2 charts\n";
        return kExitUsage;
    }
    moduli::CocycleReport report = moduli::cocycle_suite(seed, charts);
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json doc{{"tool_version", kToolVersion},
                 {"seed", report.seed},
                 {"charts", report.charts},
                 {"overall", report.overall()},
                 {"checks", checks}};
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << (report.overall() ? "OK" : "FAILED") << " seed " << report.seed << " charts "
                  << report.charts << "\n";
    }
    return report.overall() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Betti tables of the rank-2 moduli desingularizations"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    int genus = 3;
    std::string space = "n";
    std::string format = "text";
    std::string out_path;
    int genus_lo = 3, genus_hi = 3;
    bool inject_fault = false;
    std::uint64_t seed = 42;
    int charts = 3;

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of one space at one genus");
    betti->add_option("--genus", genus, "curve genus (>= 3)")->required();
    betti->add_option("--space", space, "m2, k or n")->required();
    betti->add_option("--format", format, "json, csv or text");
    betti->add_option("--out", out_path, "output path (stdout if absent)");

    CLI::App* table = app.add_subcommand("table", "CSV of all three spaces over a genus range");
    table->add_option("--genus-lo", genus_lo, "first genus")->required();
    table->add_option("--genus-hi", genus_hi, "last genus")->required();
    table->add_option("--out", out_path, "output path (stdout if absent)");

    CLI::App* verify = app.add_subcommand("verify", "cross-route identity checks at one genus");
    verify->add_option("--genus", genus, "curve genus (>= 3)")->required();
    verify->add_option("--format", format, "json or text");
    verify->add_flag("--inject-fault", inject_fault,
                     "perturb a closed-form term to prove the checks can fail");

    CLI::App* cocycle = app.add_subcommand("cocycle", "symbolic transition-matrix suite");
    cocycle->add_option("--seed", seed, "seed for the randomized instances");
    cocycle->add_option("--charts", charts, "number of charts (>= 2)");
    cocycle->add_option("--format", format, "json or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (betti->parsed()) return run_betti(genus, space, format, out_path);
        if (table->parsed()) return run_table(genus_lo, genus_hi, out_path);
        if (verify->parsed()) return run_verify(genus, format, inject_fault);
        if (cocycle->parsed()) return run_cocycle(seed, charts, format);
    } catch (const moduli::IntegralityViolation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const moduli::MismatchWithPipeline& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const moduli::NotPolynomial& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
