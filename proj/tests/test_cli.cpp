#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(MADCOLOR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) {
    return std::string(MADCOLOR_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("cli: mad") {
    CliResult r = run_cli("mad --graph " + data("c5.edges"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2/1\n");

    CliResult p3 = run_cli("mad --graph " + data("p3.edges"));
    CHECK(p3.exit_code == 0);
    CHECK(p3.out == "4/3\n");

    CliResult j = run_cli("mad --graph " + data("c5.edges") + " --json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["mad"]["num"] == 2);
    CHECK(parsed["mad"]["den"] == 1);
    CHECK(parsed["densest"]["vertices"].size() == 5);
}

TEST_CASE("cli: color and verify round-trip") {
    CliResult unsat = run_cli("color --graph " + data("k4.g6") + " --a 1 --b 1");
    CHECK(unsat.exit_code == 0);
    CHECK(unsat.out == "UNSAT\n");

    CliResult sat = run_cli("color --graph " + data("c5.edges") +
                            " --a 1 --b 1 --method auto --seed 5 --json");
    REQUIRE(sat.exit_code == 0);
    auto parsed = nlohmann::json::parse(sat.out);
    REQUIRE(parsed["status"] == "SAT");

    std::ofstream("cli_roundtrip_coloring.json") << parsed["coloring"].dump();
    CliResult ok = run_cli("verify --graph " + data("c5.edges") +
                           " --coloring cli_roundtrip_coloring.json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "OK\n");

    // A deliberately broken coloring is reported and exits 2.
    nlohmann::json bad = parsed["coloring"];
    bad["classes"]["D1"] = {0, 1, 2, 3, 4};
    bad["classes"]["O1"] = nlohmann::json::array();
    std::ofstream("cli_bad_coloring.json") << bad.dump();
    CliResult invalid = run_cli("verify --graph " + data("c5.edges") +
                                " --coloring cli_bad_coloring.json");
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.out.substr(0, 7) == "INVALID");
}

TEST_CASE("cli: color timeout exits 2") {
    CliResult r = run_cli("color --graph " + data("k4.g6") +
                          " --a 1 --b 1 --method exact --budget 2");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "TIMEOUT\n");
}

TEST_CASE("cli: audit") {
    CliResult r = run_cli("audit --graph " + data("star5.edges") + " --a 1 --b 0 --json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["covered"] == true);
    CHECK(parsed["sum_mu"]["num"] == 2);
    CHECK(parsed["sum_mu"]["den"] == 1);
    for (const auto& check : parsed["checks"]) CHECK(check["pass"] == true);
    // Layer field is an integer for covered vertices, "uncovered" otherwise.
    CHECK(parsed["vertices"][0]["layer"] == 0);
}

TEST_CASE("cli: lemma2 scan finds no violations") {
    CliResult r = run_cli("lemma2 --graph " + data("k4.g6") + " --a 1 --b 1 --json");
    CHECK(r.exit_code == 0);
    for (const auto& item : nlohmann::json::parse(r.out))
        if (item.contains("violation")) CHECK(item["violation"] == false);
}

TEST_CASE("cli: gen is deterministic and feeds the other commands") {
    CliResult once = run_cli("gen --kind gnm --n 10 --m 12 --seed 7");
    CliResult twice = run_cli("gen --kind gnm --n 10 --m 12 --seed 7");
    CHECK(once.exit_code == 0);
    CHECK(once.out == twice.out);
    CHECK(once.out.substr(0, 5) == "10 12");

    std::ofstream("cli_gen_below.edges")
        << run_cli("gen --kind below-bound --a 1 --b 1 --n 14 --seed 3").out;
    CliResult madr = run_cli("mad --graph cli_gen_below.edges --json");
    CHECK(madr.exit_code == 0);
    auto parsed = nlohmann::json::parse(madr.out);
    long long num = parsed["mad"]["num"].get<long long>();
    long long den = parsed["mad"]["den"].get<long long>();
    CHECK(num * 3 < den * 7);  // mad < 7/3

    CliResult g6 = run_cli("gen --kind complete --n 4 --out-format g6");
    CHECK(g6.out == "C~\n");
}

TEST_CASE("cli: bounds") {
    CliResult csv = run_cli("bounds --a-max 2 --b-max 1 --csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("a,b,ours,dkmr_d1,havet_sereni_d1,improved\n", 0) == 0);
    CHECK(csv.out.find("1,0,4/3,4/3,3/2,0") != std::string::npos);
    CHECK(csv.out.find("2,0,8/3,5/2,8/3,1") != std::string::npos);
    CHECK(csv.out.find("2,1,11/3,24/7,,1") != std::string::npos);
}

TEST_CASE("cli: hunt") {
    CliResult empty = run_cli("hunt --a 1 --b 0 --trials 0");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("trials: 0") != std::string::npos);
    CHECK(empty.out.find("failures: 0") != std::string::npos);

    CliResult run = run_cli("hunt --a 1 --b 1 --n-max 12 --trials 8 --seed 9 --csv");
    CHECK(run.exit_code == 0);
    CHECK(run.out.rfind("trial,seed,n,m,status,fell_back,swaps\n", 0) == 0);

    // Fixed seeds give byte-identical machine output.
    CliResult again = run_cli("hunt --a 1 --b 1 --n-max 12 --trials 8 --seed 9 --csv");
    CHECK(run.out == again.out);
}

TEST_CASE("cli: usage and I/O errors exit 1") {
    CHECK(run_cli("mad --graph /nonexistent.edges").exit_code == 1);
    CHECK(run_cli("mad").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("color --graph " + data("c5.edges") + " --a 1").exit_code == 1);
    CHECK(run_cli("gen --kind cycle --n 2").exit_code == 1);

    std::ofstream("cli_malformed.edges") << "2 1\n0 0\n";
    CHECK(run_cli("mad --graph cli_malformed.edges").exit_code == 1);
}
