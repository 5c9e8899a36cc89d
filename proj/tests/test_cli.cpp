// End-to-end tests of the command-line tool: byte-level output contracts,
// exit codes, and determinism. Each test shells out to the built binary.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectra_bounds/format.hpp"
#include "support/fixtures.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& cmd);

RunResult run_cli(const std::string& args) {
    return run_command(std::string(SPECTRA_BOUNDS_CLI_PATH) + " " + args);
}

RunResult run_cli_env(const std::string& env_prefix, const std::string& args) {
    return run_command(env_prefix + " " + std::string(SPECTRA_BOUNDS_CLI_PATH) + " " + args);
}

RunResult run_command(const std::string& base_cmd) {
    const std::string cmd = base_cmd + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

const char* kCsvHeader = "kind,alpha,i,side,bound,rho,gap,equality,branch";

std::filesystem::path tight5_path() {
    return write_temp("sb_tight5.txt", fixtures::tight_5x5_text());
}

std::filesystem::path butterfly_path() {
    return write_temp("sb_butterfly.edges", fixtures::butterfly_edge_list());
}

std::filesystem::path k3_path() { return write_temp("sb_k3.edges", "3\n1 2\n1 3\n2 3\n"); }

}  // namespace

TEST_CASE("bound on a matrix file emits the pinned CSV contract") {
    const auto r = run_cli("bound --input " + tight5_path().string() +
                           " --kind matrix --side upper --index all --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 6);  // header + five ranks
    REQUIRE(lines[0] == kCsvHeader);

    const auto row = fields_of(lines[3]);  // i = 3
    REQUIRE(row.size() == 9);
    REQUIRE(row[0] == "matrix");
    REQUIRE(row[1].empty());
    REQUIRE(row[2] == "3");
    REQUIRE(row[3] == "upper");
    REQUIRE(std::stod(row[4]) == Catch::Approx(10.810249675906654).margin(1e-9));
    REQUIRE(std::stod(row[5]) == Catch::Approx(10.810249675906654).margin(1e-6));
    REQUIRE(std::abs(std::stod(row[6])) < 1e-6);
    REQUIRE(row[7] == "true");
    REQUIRE(row[8] == "structured(t=3)");
}

TEST_CASE("bound accepts the JSON matrix form") {
    const auto path = write_temp("sb_tight5.json",
                                 R"({"n": 5, "rows": [[0,4,2,3,3],[4,0,2,2,3],[4,4,0,1,1],)"
                                 R"([4,4,1,0,1],[4,4,1,1,0]]})");
    const auto r = run_cli("bound --input " + path.string() +
                           " --kind matrix --side upper --index 3 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);
    REQUIRE(std::stod(fields_of(lines[1])[4]) == Catch::Approx(10.810249675906654).margin(1e-9));
}

TEST_CASE("bound on the dominating-vertex graph pins the attained value") {
    const auto r = run_cli("bound --input " + butterfly_path().string() +
                           " --kind graph --matrix q --alpha 1 --index 2 --side upper"
                           " --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 2);
    const auto row = fields_of(lines[1]);
    REQUIRE(row[0] == "signless-laplacian");
    REQUIRE(row[1] == "1");
    REQUIRE(std::stod(row[4]) == Catch::Approx(5.561552812808831).margin(1e-9));
    REQUIRE(std::abs(std::stod(row[6])) < 1e-6);
    REQUIRE(row[7] == "true");
}

TEST_CASE("bound across all kinds of a complete graph matches the oracle exactly") {
    const auto r = run_cli("bound --input " + k3_path().string() +
                           " --kind graph --matrix all --alpha 0 --index 1 --side upper"
                           " --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 5);
    const std::vector<std::string> kinds = {"adjacency", "signless-laplacian", "distance",
                                            "distance-signless-laplacian"};
    const std::vector<double> expected = {2.0, 4.0, 2.0, 4.0};
    for (std::size_t k = 0; k < 4; ++k) {
        const auto row = fields_of(lines[k + 1]);
        REQUIRE(row[0] == kinds[k]);
        REQUIRE(std::stod(row[4]) == Catch::Approx(expected[k]).margin(1e-9));
        REQUIRE(std::abs(std::stod(row[6])) < 1e-9);
        REQUIRE(row[7] == "true");
    }
}

TEST_CASE("row order is kind, then alpha ascending, then i, upper before lower") {
    const auto r = run_cli("bound --input " + k3_path().string() +
                           " --kind graph --matrix all --alpha 1,0 --index all --side both"
                           " --format csv");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    // 4 kinds x 2 alphas x (3 uppers + 1 lower) + header
    REQUIRE(lines.size() == 1 + 4 * 2 * 4);
    const std::vector<std::string> kinds = {"adjacency", "signless-laplacian", "distance",
                                            "distance-signless-laplacian"};
    std::size_t at = 1;
    for (const auto& kind : kinds) {
        for (const std::string alpha : {"0", "1"}) {
            for (const std::string i : {"1", "2", "3"}) {
                const auto row = fields_of(lines[at++]);
                REQUIRE(row[0] == kind);
                REQUIRE(row[1] == alpha);
                REQUIRE(row[2] == i);
                REQUIRE(row[3] == "upper");
            }
            const auto low = fields_of(lines[at++]);
            REQUIRE(low[0] == kind);
            REQUIRE(low[2] == "3");
            REQUIRE(low[3] == "lower");
        }
    }
}

TEST_CASE("index best selects the minimizing rank") {
    const auto p3 = write_temp("sb_p3.edges", "3\n1 2\n2 3\n");
    const auto r = run_cli("bound --input " + p3.string() +
                           " --kind graph --matrix adj --alpha 0 --index best --side upper"
                           " --format csv");
    REQUIRE(r.exit_code == 0);
    const auto row = fields_of(lines_of(r.output)[1]);
    REQUIRE(row[2] == "2");
    REQUIRE(std::stod(row[4]) == Catch::Approx(std::sqrt(2.0)).margin(1e-9));

    const auto m = run_cli("bound --input " + tight5_path().string() +
                           " --kind matrix --index best --side upper --format csv");
    REQUIRE(m.exit_code == 0);
    const auto mrow = fields_of(lines_of(m.output)[1]);
    REQUIRE(mrow[2] == "3");
    REQUIRE(std::stod(mrow[4]) == Catch::Approx(10.810249675906654).margin(1e-9));
}

TEST_CASE("JSON output round-trips byte-for-byte through its own parse") {
    const auto r = run_cli("bound --input " + butterfly_path().string() +
                           " --kind graph --matrix all --alpha -1,0,1 --index all --side both"
                           " --format json");
    REQUIRE(r.exit_code == 0);

    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.contains("rows"));
    REQUIRE(doc["rows"].is_array());
    REQUIRE(doc["rows"].size() == 4 * 3 * 6);  // 4 kinds x 3 alphas x (5 uppers + 1 lower)

    // Rebuild the document with the same field order and 12-digit rendering;
    // parsing must reproduce every field exactly.
    std::string rebuilt = "{\"rows\":[";
    bool first = true;
    for (const auto& row : doc["rows"]) {
        REQUIRE(row["equality"].is_boolean());
        if (!first) rebuilt += ',';
        first = false;
        rebuilt += "{\"kind\":\"" + row["kind"].get<std::string>() + "\",\"alpha\":";
        rebuilt += row["alpha"].is_null()
                       ? "null"
                       : spectra_bounds::format_significant(row["alpha"].get<double>(), 12);
        rebuilt += ",\"i\":" + std::to_string(row["i"].get<std::size_t>());
        rebuilt += ",\"side\":\"" + row["side"].get<std::string>() + "\"";
        rebuilt += ",\"bound\":" + spectra_bounds::format_significant(row["bound"].get<double>(), 12);
        rebuilt += ",\"rho\":" + spectra_bounds::format_significant(row["rho"].get<double>(), 12);
        rebuilt += ",\"gap\":" + spectra_bounds::format_significant(row["gap"].get<double>(), 12);
        rebuilt += std::string(",\"equality\":") + (row["equality"].get<bool>() ? "true" : "false");
        rebuilt += ",\"branch\":\"" + row["branch"].get<std::string>() + "\"}";
    }
    rebuilt += "]}\n";
    REQUIRE(rebuilt == r.output);
}

TEST_CASE("output is deterministic given input, config, and seed") {
    const auto args = "verify --kind graph --trials 8 --seed 7 --alpha -1,0,1,2";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.output == b.output);
    REQUIRE(a.output.find("verify: PASS trials=8") != std::string::npos);

    const auto single = run_cli_env("SPECTRA_BOUNDS_THREADS=1", args);
    REQUIRE(single.output == a.output);
}

TEST_CASE("verify in matrix mode is reproducible") {
    const auto r = run_cli("verify --kind matrix --trials 6 --seed 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("violations=0") != std::string::npos);
    REQUIRE(run_cli("verify --kind matrix --trials 6 --seed 3").output == r.output);
}

TEST_CASE("verify passes a 100-trial graph run across kinds and exponents") {
    const auto r = run_cli("verify --kind graph --trials 100 --seed 42 --matrix all"
                           " --alpha -1,0,1,2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("verify: PASS trials=100") != std::string::npos);
    REQUIRE(r.output.find("violations=0") != std::string::npos);
}

TEST_CASE("verify rejects a zero trial count") {
    const auto r = run_cli("verify --kind graph --trials 0 --seed 1");
    REQUIRE(r.exit_code == 1);
}

TEST_CASE("input failures exit with code 1") {
    REQUIRE(run_cli("bound --input /nonexistent.txt --kind matrix").exit_code == 1);

    const auto bad = write_temp("sb_bad_matrix.txt", "2\n1 2\n");
    REQUIRE(run_cli("bound --input " + bad.string() + " --kind matrix").exit_code == 1);

    const auto reducible = write_temp("sb_reducible.txt", "2\n1 1\n0 1\n");
    REQUIRE(run_cli("bound --input " + reducible.string() + " --kind matrix").exit_code == 1);

    const auto disconnected = write_temp("sb_disc.edges", "4\n1 2\n3 4\n");
    REQUIRE(run_cli("bound --input " + disconnected.string() + " --kind graph").exit_code == 1);

    REQUIRE(run_cli("bound --input " + k3_path().string() + " --kind graph --index 9")
                .exit_code == 1);
}

TEST_CASE("oracle non-convergence exits with code 2") {
    // Weak off-diagonal coupling contracts by 1 - 2e-6 per step; the default
    // iteration budget cannot bring the residual anywhere near the default
    // tolerance.
    const auto slow = write_temp("sb_slow.txt", "2\n1 1e-6\n4e-6 1\n");
    const auto r = run_cli("bound --input " + slow.string() + " --kind matrix");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.output.find("did not converge") != std::string::npos);
}

TEST_CASE("sweep emits one gap row per kind and exponent") {
    const auto p3 = write_temp("sb_p3_sweep.edges", "3\n1 2\n2 3\n");
    const auto r = run_cli("sweep --input " + p3.string() +
                           " --kind graph --matrix dist --alpha 0,1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    REQUIRE(lines[0] == "kind,alpha,best_i,upper,lower,rho,upper_gap,lower_gap");

    const auto at0 = fields_of(lines[1]);
    REQUIRE(at0[0] == "distance");
    REQUIRE(at0[1] == "0");
    REQUIRE(at0[2] == "3");
    const double two_sqrt2 = 2.0 * std::sqrt(2.0);
    const double rho = 1.0 + std::sqrt(3.0);
    REQUIRE(std::stod(at0[3]) == Catch::Approx(two_sqrt2).margin(1e-9));
    REQUIRE(std::stod(at0[6]) == Catch::Approx(two_sqrt2 - rho).margin(1e-9));
    REQUIRE(std::stod(at0[7]) == Catch::Approx(0.5 * (1.0 + std::sqrt(17.0)) - rho).margin(1e-9));
}

TEST_CASE("sweep reports the attained signless bound of the dominating-vertex graph") {
    const auto r = run_cli("sweep --input " + butterfly_path().string() +
                           " --kind graph --matrix q --alpha 0,1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    const auto at1 = fields_of(lines[2]);
    REQUIRE(at1[1] == "1");
    REQUIRE(at1[2] == "2");                          // equality at rank 2
    REQUIRE(std::abs(std::stod(at1[6])) < 1e-6);     // upper gap vanishes
}

TEST_CASE("sweep gaps vanish on complete graphs") {
    std::string k5 = "5\n";
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) k5 += std::to_string(u) + " " + std::to_string(v) + "\n";
    const auto path = write_temp("sb_k5.edges", k5);
    const auto r = run_cli("sweep --input " + path.string() +
                           " --kind graph --matrix all --alpha -1,0,1,2");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 1 + 4 * 4);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto row = fields_of(lines[k]);
        REQUIRE(std::abs(std::stod(row[6])) < 1e-9);
        REQUIRE(std::abs(std::stod(row[7])) < 1e-9);
    }
}

TEST_CASE("table format prints an aligned header") {
    const auto r = run_cli("bound --input " + k3_path().string() +
                           " --kind graph --matrix adj --alpha 0 --index 1");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() >= 3);
    REQUIRE(lines[0].find("kind") == 0);
    REQUIRE(lines[0].find("bound") != std::string::npos);
    REQUIRE(lines[0].find("branch") != std::string::npos);
}
