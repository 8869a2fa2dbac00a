#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "moduli/pipeline.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("MODULI_CLI");
    REQUIRE_MESSAGE(p != nullptr, "MODULI_CLI must point at the built binary");
    return p;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("betti json record") {
    RunResult r = run("betti --genus 3 --space n --format json");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["dim"] == 12);
    CHECK(doc["genus"] == 3);
    CHECK(doc["space"] == "n");
    CHECK(doc["betti"].size() == 13);
    CHECK(doc["duality_ok"] == true);
    CHECK(doc["tool_version"].is_string());

    // matches the library
    moduli::BettiTable t = moduli::betti_table(moduli::GenusConfig(3), moduli::Space::N);
    for (size_t k = 0; k < t.betti.size(); ++k) CHECK(doc["betti"][k] == t.betti[k]);
    CHECK(doc["euler"] == t.euler);

    // parse -> dump round-trips byte-identically
    std::string line = r.out.substr(0, r.out.find('\n'));
    CHECK(json::parse(line).dump() == line);
}

TEST_CASE("betti argument validation") {
    CHECK(run("betti --genus 2 --space n").exit_code == 2);
    CHECK(run("betti --genus 3 --space q").exit_code == 2);
    CHECK(run("betti --genus 3 --space n --format yaml").exit_code == 2);
    CHECK(run("betti --space n").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("betti csv format") {
    RunResult r = run("betti --genus 3 --space n --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("k,b_k\n", 0) == 0);
    CHECK(count_lines(r.out) == 14);  // header + 13 rows
    CHECK(r.out.find("\r") == std::string::npos);
}

TEST_CASE("the genus cap is configurable through the environment") {
    CHECK(run("betti --genus 21 --space n --format json").exit_code == 2);
    CHECK(run("betti --genus 6 --space n --format json", "MODULI_BETTI_MAX_GENUS=5 ").exit_code == 2);
    CHECK(run("betti --genus 21 --space n --format json", "MODULI_BETTI_MAX_GENUS=21 ").exit_code == 0);
}

TEST_CASE("table across a genus range") {
    RunResult r = run("table --genus-lo 3 --genus-hi 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("genus,space,k,b_k\n", 0) == 0);
    CHECK(count_lines(r.out) == 1 + 39);  // 3 spaces x 13 degrees
    CHECK(run("table --genus-lo 4 --genus-hi 3").exit_code == 2);
    CHECK(run("table --genus-lo 3 --genus-hi 3 --out /nonexistent-dir/t.csv").exit_code == 4);
}

TEST_CASE("verify subcommand") {
    CHECK(run("verify --genus 3").exit_code == 0);
    RunResult g4 = run("verify --genus 4");
    CHECK(g4.exit_code == 0);
    CHECK(g4.out.find("identically zero") != std::string::npos);
    CHECK(run("verify --genus 3 --inject-fault").exit_code == 3);
    CHECK(run("verify --genus 1").exit_code == 2);

    RunResult js = run("verify --genus 3 --format json");
    REQUIRE(js.exit_code == 0);
    json doc = json::parse(js.out);
    CHECK(doc["overall"] == true);
    CHECK(doc["checks"].is_array());
}

TEST_CASE("cocycle subcommand") {
    RunResult a = run("cocycle --seed 42 --charts 3");
    CHECK(a.exit_code == 0);
    RunResult b = run("cocycle --seed 42 --charts 3");
    CHECK(a.out == b.out);  // byte-for-byte reproducible
    CHECK(run("cocycle --seed 42 --charts 1").exit_code == 2);

    RunResult js = run("cocycle --seed 7 --charts 2 --format json");
    REQUIRE(js.exit_code == 0);
    json doc = json::parse(js.out);
    CHECK(doc["overall"] == true);
    CHECK(doc["seed"] == 7);
    CHECK(doc["charts"] == 2);
}

TEST_CASE("writing records to a file") {
    std::string path = "/tmp/moduli_cli_test_betti.csv";
    std::remove(path.c_str());
    RunResult r = run("betti --genus 3 --space k --format csv --out " + path);
    REQUIRE(r.exit_code == 0);
    std::FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[64];
    REQUIRE(std::fgets(buf, sizeof buf, f) != nullptr);
    CHECK(std::string(buf) == "k,b_k\n");
    std::fclose(f);
    std::remove(path.c_str());
}
