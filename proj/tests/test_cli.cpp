#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "agol/cfrac.hpp"
#include "agol/quad.hpp"
#include "agol/words.hpp"

using nlohmann::json;
using namespace agol;

namespace {

struct CmdResult {
    int status;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so error
// cases only assert on the exit status.
CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(AGOL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = pclose(pipe);
    REQUIRE(WIFEXITED(rc));
    return {WEXITSTATUS(rc), out};
}

QuadExt quad_of(const json& j) { return QuadExt::from_json(j.dump()); }

}  // namespace

TEST_CASE("dilatation text output") {
    CmdResult r = run_cli("dilatation \"1,0,1;0,1,1\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("(7+3√5)/2") != std::string::npos);
    CHECK(r.out.find("t^2 - 7 t + 1") != std::string::npos);
    CHECK(r.out.find("approx") != std::string::npos);

    CmdResult r2 = run_cli("dilatation \"1,1,1\"");
    CHECK(r2.out.find("2+√3") != std::string::npos);
    CmdResult r3 = run_cli("dilatation \"1,2,1\"");
    CHECK(r3.out.find("(5+√21)/2") != std::string::npos);
}

TEST_CASE("dilatation json round-trips the exact value") {
    CmdResult r = run_cli("dilatation --json \"1,0,1;0,1,1\"");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(quad_of(j["dilatation"]) == QuadExt(7, 3, 2, 5));
    CHECK(j["minimal_polynomial"] == "t^2 - 7 t + 1");
    CHECK(j["word"] == json::parse("[[1,0,1],[0,1,1]]"));
}

TEST_CASE("eigenvector json matches the library") {
    CmdResult r = run_cli("eigenvector --json \"1,2,1\"");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    QuadVec3 v = normalized_eigenvector(ParamWord::parse("1,2,1"));
    REQUIRE(j["eigenvector"].size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(quad_of(j["eigenvector"][i]) == v[i]);
}

TEST_CASE("cycle json uses the documented descriptor schema") {
    CmdResult r = run_cli("cycle --surface torus --json \"1,2,1\"");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j.size() == 7);
    CHECK(j["surface"] == "torus");
    CHECK(j["length"] == 6);
    CHECK(j["total"] == 7);
    CHECK(j["split_word"] == "RRRLLL");
    CHECK(quad_of(j["dilatation"]) == QuadExt(5, 1, 2, 21));

    json s = json::parse(run_cli("cycle --surface sphere --json \"1,0,1;0,1,1\"").out);
    CHECK(s["length"] == 10);
    CHECK(s["total"] == 12);
    CHECK(s["split_word"] == "MRLLLMRLLL");
}

TEST_CASE("cycle without a surface is a usage error") {
    CHECK(run_cli("cycle \"1,1,1\"").status == 2);
    CHECK(run_cli("cycle --surface klein \"1,1,1\"").status == 2);
}

TEST_CASE("simulate reports the detected cycle") {
    CmdResult r = run_cli("simulate --surface torus \"1,1,1\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("m = 3") != std::string::npos);

    json j = json::parse(run_cli("simulate --surface sphere --json \"1,2,1\"").out);
    CHECK(j["m"] == 8);
    CHECK(j["total"] == 9);
    CHECK(j["split_word"] == "RLRLLRLL");
    QuadExt lambda = QuadExt(5, 1, 2, 21);
    CHECK(quad_of(j["scale"]) * lambda == QuadExt(1));
}

TEST_CASE("simulate trace emits one json record per step") {
    CmdResult r = run_cli("simulate --surface torus \"1,2,1\" --trace --snapshots");
    REQUIRE(r.status == 0);
    std::vector<std::string> lines;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 7);  // 6 steps + summary
    long total = 0;
    for (int i = 0; i < 6; ++i) {
        json step = json::parse(lines[i]);
        CHECK(step["step"] == i);
        total += step["number"].get<long>();
        CHECK(step["snapshot"]["weights"].size() == 6);
        CHECK(step["snapshot"]["switches"].size() == 4);
    }
    CHECK(total == 7);
    CHECK(json::parse(lines.back())["m"] == 6);
}

TEST_CASE("simulate fails with a tight step bound") {
    CHECK(run_cli("simulate --surface torus \"1,2,1\" --max-steps 2").status == 1);
}

TEST_CASE("conjugate certificates") {
    CmdResult flip_pair = run_cli("conjugate \"1,2,1\" \"2,1,1\"");
    CHECK(flip_pair.status == 0);
    CHECK(flip_pair.out.find("equivalent: yes") != std::string::npos);
    CHECK(flip_pair.out.find("flip") != std::string::npos);

    json shift_pair =
        json::parse(run_cli("conjugate --json \"1,1,2;2,1,1\" \"2,1,1;1,1,2\"").out);
    CHECK(shift_pair["equivalent"] == true);
    CHECK(shift_pair["certificate"]["shift"] == 1);
    CHECK(shift_pair["certificate"]["flip"] == false);

    CmdResult neq = run_cli("conjugate \"1,2,1\" \"1,1,1\"");
    CHECK(neq.out.find("equivalent: no") != std::string::npos);
}

TEST_CASE("conjugate reports split ratios for a matching profile") {
    json j = json::parse(run_cli("conjugate --json \"1,2,1;2,1,1\" \"3,0,1;0,3,1\"").out);
    REQUIRE(j["equivalent"] == false);
    REQUIRE(j.contains("distinguishing"));
    QuadExt s1 = quad_of(j["distinguishing"]["s1"]);
    QuadExt s2 = quad_of(j["distinguishing"]["s2"]);
    CHECK(s1 != s2);
    CHECK(s1 + s2 != QuadExt(1));
}

TEST_CASE("canonical prints the orbit minimum") {
    CmdResult r = run_cli("canonical \"2,1,1;1,1,2\"");
    CHECK(r.status == 0);
    CHECK(r.out == "1,1,2;1,2,1\n");
}

TEST_CASE("verify passes on the known examples") {
    for (const char* w : {"\"1,1,1\"", "\"1,2,1\"", "\"1,0,1;0,1,1\""}) {
        CmdResult r = run_cli(std::string("verify ") + w);
        INFO(w);
        CHECK(r.status == 0);
        CHECK(r.out.find("pass") != std::string::npos);
        CHECK(r.out.find("MISMATCH") == std::string::npos);
    }
    json j = json::parse(run_cli("verify --json --surface sphere \"2,3,2\"").out);
    CHECK(j["pass"] == true);
    CHECK(j["eigenpair"] == true);
}

TEST_CASE("verify fails against a corrupted encoding file") {
    std::string path = "/tmp/agol_cli_bad_tracks.json";
    std::ofstream(path) << "{\"version\": 1, \"tracks\": {}}";
    std::string cmd = std::string("AGOL_TRACKS=") + path + " " + AGOL_CLI_PATH +
                      " verify \"1,1,1\" 2>/dev/null";
    int rc = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(rc));
    CHECK(WEXITSTATUS(rc) == 1);
    std::remove(path.c_str());
}

TEST_CASE("reverse flag flips the word convention") {
    CmdResult a = run_cli("dilatation --json \"1,0,1;0,1,1\"");
    CmdResult b = run_cli("dilatation --json --reverse \"0,1,1;1,0,1\"");
    CHECK(a.out == b.out);
}

TEST_CASE("batch table") {
    std::string path = "/tmp/agol_cli_batch.txt";
    std::ofstream(path) << "1,1,1\n1,2,1\n\n1,0,1;0,1,1\n";
    CmdResult r = run_cli(std::string("batch ") + path);
    CHECK(r.status == 0);
    std::vector<std::string> lines;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    REQUIRE(lines.size() == 4);  // header + 3 rows
    CHECK(lines[0].find("dilatation") != std::string::npos);
    CHECK(lines[1].find("2+√3\t3\t6\t5\t8\tyes") != std::string::npos);
    CHECK(lines[2].find("\t6\t7\t8\t9\tno") != std::string::npos);

    json rows = json::parse(run_cli(std::string("batch --json ") + path).out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["symmetric"] == true);
    CHECK(rows[1]["length_sphere"] == 8);

    // Conjugate words produce identical invariant rows.
    std::ofstream(path) << "1,1,2;2,1,1\n2,1,1;1,1,2\n";
    json dup = json::parse(run_cli(std::string("batch --json ") + path).out);
    REQUIRE(dup.size() == 2);
    CHECK(dup[0] == dup[1]);

    std::ofstream(path) << "";
    CmdResult empty = run_cli(std::string("batch ") + path);
    CHECK(empty.status == 0);

    std::ofstream(path) << "1,1,1\nnot a word\n";
    CmdResult bad = run_cli(std::string("batch ") + path);
    CHECK(bad.status == 1);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("conjugate \"1,1,1\"").status == 2);
    CHECK(run_cli("--help").status == 0);
}

TEST_CASE("domain errors exit with status 1") {
    CHECK(run_cli("dilatation \"1,1,0\"").status == 1);
    CHECK(run_cli("dilatation \"0,0,1\"").status == 1);
    CHECK(run_cli("dilatation \"nonsense\"").status == 1);
    CHECK(run_cli("batch /nonexistent/file").status == 1);
}
