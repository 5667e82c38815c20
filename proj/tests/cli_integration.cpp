// End-to-end tests of the command-line tool. The test binary receives the
// CLI path and the data directory as its two arguments (wired by CMake) and
// drives the real executable through a shell.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "subprocess.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;
std::string g_catalog;

using gdp::testing::shell_quote;
using gdp::testing::run_command;
using gdp::testing::RunResult;

// Runs the CLI with the shipped catalog; stderr is dropped.
RunResult cli(const std::string& args) {
    return run_command(shell_quote(g_cli) + " --catalog " + shell_quote(g_catalog) + " " + args +
                       " 2>/dev/null");
}

// Runs the CLI without injecting --catalog.
RunResult cli_bare(const std::string& args) {
    return run_command(shell_quote(g_cli) + " " + args + " 2>/dev/null");
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("chi prints the full golden breakdown for the A4 generator") {
    RunResult r = cli("chi 'S(A4)' --coeffs 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "surface = S(A4)\n"
          "coeffs = 1\n"
          "pullback.0 = 1/1\n"
          "pullback.1 = 2/5\n"
          "pullback.2 = 4/5\n"
          "pullback.3 = 6/5\n"
          "pullback.4 = 3/5\n"
          "self_int = 1/5\n"
          "k_dot = -1/1\n"
          "point.0.type = A4\n"
          "point.0.cartier = false\n"
          "point.0.a_O = -3/5\n"
          "point.0.a_omega = -1/1\n"
          "point.0.c2_local = 18/5\n"
          "c2_global = 7/5\n"
          "chi_structure = 1/1\n"
          "chi_omega = -1/1\n");
}

TEST_CASE("chi defaults to the zero divisor") {
    RunResult r = cli("chi 'S(A4)'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("coeffs = 0\n") != std::string::npos);
    CHECK(r.output.find("chi_omega = -1/1\n") != std::string::npos);
    CHECK(r.output.find("point.0.cartier = true\n") != std::string::npos);
}

TEST_CASE("records format uses key=value") {
    RunResult r = cli("--format records chi 'S(A4)' --coeffs 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chi_omega=-1/1\n") != std::string::npos);
    CHECK(r.output.find("pullback.3=6/5\n") != std::string::npos);
    CHECK(r.output.find(" = ") == std::string::npos);
}

TEST_CASE("lift prints pullback coefficients only") {
    RunResult r = cli("lift 'S(A4)' --coeffs 5");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "surface = S(A4)");
    CHECK(lines[1] == "coeffs = 5");
    CHECK(lines[2] == "pullback.0 = 5/1");
    CHECK(lines[3] == "pullback.1 = 2/1");
    CHECK(lines[6] == "pullback.4 = 3/1");
}

TEST_CASE("ample certifies the generator through the Gram criterion") {
    RunResult r = cli("ample 'S(A4)' --coeffs 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "surface = S(A4)\n"
          "coeffs = 1\n"
          "method = gram\n"
          "gram.0 = 1/5\n"
          "verdict = ample\n");
}

TEST_CASE("a negative class is simply not ample, not an error") {
    RunResult r = cli("ample 'S(A4)' --coeffs -2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict = not_ample\n") != std::string::npos);
    CHECK(r.output.find("gram.0 = -2/5\n") != std::string::npos);
}

TEST_CASE("search emits one witness record at bound 1") {
    RunResult r = cli("--format records search 'S(A4)' --bound 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"coefficients\":[1],\"chi\":\"-1/1\",\"gram\":[\"1/5\"]}\n");
}

TEST_CASE("search at bound 0 emits nothing in records mode") {
    RunResult r = cli("--format records search 'S(A4)' --bound 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
}

TEST_CASE("search table output") {
    RunResult r = cli("search 'S(A4)' --bound 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "surface = S(A4)\n"
          "bound = 2\n"
          "examined = 5\n"
          "witness: a=(1), chi=-1, gram=(1/5)\n"
          "witnesses = 1\n");

    RunResult empty = cli("search 'S(A4)' --bound 0");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output ==
          "surface = S(A4)\n"
          "bound = 0\n"
          "examined = 1\n"
          "no witnesses\n");
}

TEST_CASE("search reports budget truncation") {
    RunResult r = cli("search 'S(A4)' --bound 1 --budget 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("truncated = true\n") != std::string::npos);
    CHECK(r.output.find("examined = 2\n") != std::string::npos);

    RunResult records = cli("--format records search 'S(A4)' --bound 1 --budget 2");
    CHECK(records.exit_code == 0);
    CHECK(records.output == "{\"truncated\":true,\"examined\":2}\n");
}

TEST_CASE("thread count does not change search output") {
    RunResult one = cli("search 'S(A4)' --bound 40 --threads 1");
    RunResult four = cli("search 'S(A4)' --bound 40 --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(one.output.find("witness: a=(1), chi=-1, gram=(1/5)\n") != std::string::npos);
}

TEST_CASE("surfaces without encoded curves are refused with exit 1") {
    for (const char* cmd : {"chi 'S(E6)'", "lift 'S(E6)'", "ample 'S(E6)'",
                            "search 'S(E6)' --bound 1"}) {
        RunResult r = cli(cmd);
        CAPTURE(cmd);
        CHECK(r.exit_code == 1);
    }
}

TEST_CASE("unknown surfaces are refused with exit 1") {
    RunResult r = cli("chi 'S(Z99)'");
    CHECK(r.exit_code == 1);
}

TEST_CASE("malformed coefficients exit 2") {
    CHECK(cli("chi 'S(A4)' --coeffs 1,2").exit_code == 2);
    CHECK(cli("chi 'S(A4)' --coeffs x").exit_code == 2);
    CHECK(cli("lift 'S(A4)' --coeffs 1,").exit_code == 2);
}

TEST_CASE("fan-sings classifies the example fans") {
    RunResult r = cli_bare("fan-sings --rays '1,2;1,-2;-1,0'");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "A1 A1 A3\n");

    RunResult smooth = cli_bare("fan-sings --rays '1,0;0,1;-1,-1'");
    CHECK(smooth.exit_code == 0);
    CHECK(smooth.output == "no singularities\n");

    RunResult three = cli_bare("fan-sings --rays '-2,1;1,1;1,-2'");
    CHECK(three.exit_code == 0);
    CHECK(three.output == "A2 A2 A2\n");

    RunResult records = cli_bare("--format records fan-sings --rays '1,2;1,-2;-1,0'");
    CHECK(records.exit_code == 0);
    CHECK(records.output == "{\"singularities\":[\"A1\",\"A1\",\"A3\"]}\n");
}

TEST_CASE("fan-sings distinguishes syntax errors from bad fans") {
    CHECK(cli_bare("fan-sings --rays '1,2;3'").exit_code == 2);
    CHECK(cli_bare("fan-sings --rays 'a,b;1,0;-1,-1'").exit_code == 2);
    // Valid syntax, invalid fan: not primitive / not complete.
    CHECK(cli_bare("fan-sings --rays '2,4;0,1;-1,-1'").exit_code == 1);
    CHECK(cli_bare("fan-sings --rays '1,0;0,1;1,1'").exit_code == 1);
}

TEST_CASE("validate reports every catalog surface as ok") {
    RunResult r = cli("validate all");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    CHECK(lines.size() == 31);
    bool saw_a4 = false, saw_p2 = false;
    for (const auto& line : lines) {
        CHECK(line.find(": ok") != std::string::npos);
        if (line == "S(A4): ok") saw_a4 = true;
        if (line == "P2: ok (positivity unsupported)") saw_p2 = true;
    }
    CHECK(saw_a4);
    CHECK(saw_p2);
    CHECK(cli("validate 'S(A4)'").exit_code == 0);
    CHECK(cli("validate 'S(Z99)'").exit_code == 1);
}

TEST_CASE("report summarises the catalog with computed evidence") {
    RunResult r = cli("report");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 32);  // header + 31 surfaces
    CHECK(lines[0].find("surface") == 0);
    CHECK(r.output.find("a=(1), chi=-1") != std::string::npos);

    int weil = 0, toric = 0, open_count = 0;
    for (const auto& line : lines) {
        if (line.find(" fails_weil_bv ") != std::string::npos) ++weil;
        if (line.find(" toric ") != std::string::npos) ++toric;
        if (line.find(" open ") != std::string::npos) ++open_count;
    }
    CHECK(weil == 8);
    CHECK(toric == 5);
    CHECK(open_count == 1);
}

TEST_CASE("report records are one JSON object per surface") {
    RunResult r = cli("--format records report");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 31);
    int weil = 0;
    for (const auto& line : lines) {
        auto parsed = nlohmann::json::parse(line);
        CHECK(parsed.contains("surface"));
        CHECK(parsed.contains("status"));
        CHECK(parsed.contains("evidence"));
        if (parsed["status"] == "fails_weil_bv") ++weil;
        if (parsed["surface"] == "S(A4)") {
            CHECK(parsed["status"] == "fails_weil_bv");
            CHECK(parsed["evidence"] == "a=(1), chi=-1");
        }
    }
    CHECK(weil == 8);
}

TEST_CASE("report output is stable across runs") {
    RunResult a = cli("--format records report");
    RunResult b = cli("--format records report");
    CHECK(a.output == b.output);
}

TEST_CASE("the catalog can come from the environment") {
    ::setenv("GDP_CATALOG", g_catalog.c_str(), 1);
    RunResult r = cli_bare("chi 'S(A4)' --coeffs 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chi_omega = -1/1\n") != std::string::npos);

    // An explicit --catalog wins over the environment.
    ::setenv("GDP_CATALOG", "/nonexistent/catalog.json", 1);
    RunResult still = cli("chi 'S(A4)' --coeffs 1");
    CHECK(still.exit_code == 0);
    ::unsetenv("GDP_CATALOG");
}

TEST_CASE("without catalog or environment the built-ins serve") {
    ::unsetenv("GDP_CATALOG");
    RunResult r = cli_bare("chi 'S(A4)' --coeffs 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chi_omega = -1/1\n") != std::string::npos);
}

TEST_CASE("broken catalog files map to the right exit codes") {
    const std::string bad_syntax = "/tmp/gdp_cli_bad_syntax.json";
    {
        std::ofstream out(bad_syntax);
        out << "{\"surfaces\": [}";
    }
    CHECK(cli_bare("--catalog " + shell_quote(bad_syntax) + " validate all").exit_code == 2);

    const std::string bad_model = "/tmp/gdp_cli_bad_model.json";
    {
        std::ofstream out(bad_model);
        out << R"({"surfaces": [{"name": "X", "degree": 5,
                   "curves": [{"id": 0, "self": -2}],
                   "intersections": [], "singular_points": [], "metadata": {}}]})";
    }
    CHECK(cli_bare("--catalog " + shell_quote(bad_model) + " validate all").exit_code == 1);

    CHECK(cli_bare("--catalog /nonexistent/catalog.json validate all").exit_code == 1);
    std::remove(bad_syntax.c_str());
    std::remove(bad_model.c_str());
}

TEST_CASE("argument parsing errors exit 2 and help exits 0") {
    CHECK(run_command(shell_quote(g_cli) + " 2>/dev/null").exit_code == 2);
    CHECK(run_command(shell_quote(g_cli) + " frobnicate 2>/dev/null").exit_code == 2);
    CHECK(run_command(shell_quote(g_cli) + " search 'S(A4)' 2>/dev/null").exit_code == 2);
    CHECK(run_command(shell_quote(g_cli) + " search 'S(A4)' --bound -1 2>/dev/null")
              .exit_code == 2);
    CHECK(run_command(shell_quote(g_cli) + " --help >/dev/null 2>&1").exit_code == 0);
    CHECK(run_command(shell_quote(g_cli) + " chi --help >/dev/null 2>&1").exit_code == 0);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: gdp_cli_tests <cli-binary> <data-dir>\n";
        return 1;
    }
    g_cli = argv[1];
    g_catalog = std::string(argv[2]) + "/catalog.json";
    ::unsetenv("GDP_CATALOG");

    doctest::Context context;
    return context.run();
}
