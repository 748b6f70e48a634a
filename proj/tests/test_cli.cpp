// Drives the installed binary end to end through popen; goldens pin the
// text and JSON documents byte for byte.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SCHUBERT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
    return res;
}

std::string json_doc(const std::string& literal) {
    return nlohmann::ordered_json::parse(literal).dump(2) + "\n";
}

}  // namespace

TEST_CASE("present subcommand") {
    RunResult quantum = run_cli("present -k 2 -n 4 --p quantum");
    CHECK(quantum.code == 0);
    CHECK(quantum.out ==
          "k = 2, n = 4\n"
          "p = X^4 + q\n"
          "A = Z[q:4]\n"
          "ring = A[D1,D2] / (R1, R2)\n"
          "R1 = -D1^3 + 2*D1*D2\n"
          "R2 = -D1^4 + D1^2*D2 + D2^2 + q\n");
    CHECK(run_cli("present -k 2 -n 4 --p quantum").out == quantum.out);

    RunResult classical = run_cli("present -k 2 -n 4");
    CHECK(classical.code == 0);
    CHECK(classical.out ==
          "k = 2, n = 4\n"
          "p = X^4\n"
          "A = Z\n"
          "ring = A[D1,D2] / (R1, R2)\n"
          "R1 = -D1^3 + 2*D1*D2\n"
          "R2 = -D1^4 + D1^2*D2 + D2^2\n");

    RunResult generic = run_cli(
        "present -k 2 -n 4 --ring c1:1,c2:2,c3:3,c4:4 "
        "--p 'X^4 + X^3*c1 + X^2*c2 + X*c3 + c4'");
    CHECK(generic.code == 0);
    CHECK(generic.out ==
          "k = 2, n = 4\n"
          "p = X^4 + X^3*c1 + X^2*c2 + X*c3 + c4\n"
          "A = Z[c1:1,c2:2,c3:3,c4:4]\n"
          "ring = A[D1,D2] / (R1, R2)\n"
          "R1 = -D1^3 + 2*D1*D2 + D1*c2 + D2*c1 + c3\n"
          "R2 = -D1^4 - D1^3*c1 + D1^2*D2 + 2*D1*D2*c1 + D1*c3 + D2^2 + D2*c2 + c4\n");

    RunResult json = run_cli("present -k 2 -n 4 --p quantum --format json");
    CHECK(json.code == 0);
    CHECK(json.out == json_doc(R"({
        "k": 2,
        "n": 4,
        "ring": [{"name": "q", "degree": 4}],
        "p": "X^4 + q",
        "generators": ["D1", "D2"],
        "relations": ["-D1^3 + 2*D1*D2", "-D1^4 + D1^2*D2 + D2^2 + q"]
    })"));
    CHECK(run_cli("present -k 2 -n 4 --p quantum --format json").out == json.out);

    RunResult equivariant = run_cli(
        "present -k 2 -n 4 --ring y1:1,y2:1,y3:1,y4:1,q:4 "
        "--p 'X*(X + y1 - y2)*(X + y1 - y3)*(X + y1 - y4) + q'");
    CHECK(equivariant.code == 0);
    CHECK(equivariant.out.find("A = Z[y1:1,y2:1,y3:1,y4:1,q:4]\n") != std::string::npos);
    CHECK(equivariant.out.find("R2 = ") != std::string::npos);
}

TEST_CASE("multiply subcommand") {
    RunResult t = run_cli("multiply -k 2 -n 4 --p quantum --lhs 2,1 --rhs 1");
    CHECK(t.code == 0);
    CHECK(t.out == "σ(2,1) * σ(1) = σ(2,2) + q*σ()\n");

    RunResult j = run_cli("multiply -k 2 -n 4 --p quantum --lhs 2,1 --rhs 1 --format json");
    CHECK(j.code == 0);
    CHECK(j.out == json_doc(R"({
        "lhs": "2,1",
        "rhs": "1",
        "result": [
            {"partition": "2,2", "coeff": "1"},
            {"partition": "", "coeff": "q"}
        ]
    })"));

    CHECK(run_cli("multiply -k 2 -n 4 --lhs 1 --rhs 1").out ==
          "σ(1) * σ(1) = σ(2) + σ(1,1)\n");
    CHECK(run_cli("multiply -k 2 -n 4 --lhs 0 --rhs 2,1").out ==
          "σ() * σ(2,1) = σ(2,1)\n");
}

TEST_CASE("pieri subcommand") {
    RunResult t = run_cli("pieri -k 2 -n 4 --order 1 --class 1");
    CHECK(t.code == 0);
    CHECK(t.out == "D_1 σ(1) = σ(2) + σ(1,1)\n");

    RunResult j = run_cli("pieri -k 2 -n 4 --order 1 --class 1 --format json");
    CHECK(j.code == 0);
    CHECK(j.out == json_doc(R"({
        "order": 1,
        "class": "1",
        "result": [
            {"partition": "2", "coeff": "1"},
            {"partition": "1,1", "coeff": "1"}
        ]
    })"));

    CHECK(run_cli("pieri -k 2 -n 4 --p quantum --order 1 --class 2,1").out ==
          "D_1 σ(2,1) = σ(2,2) + q*σ()\n");
    CHECK(run_cli("pieri -k 2 -n 4 --order 0 --class 2,1").out ==
          "D_0 σ(2,1) = σ(2,1)\n");
}

TEST_CASE("giambelli subcommand") {
    RunResult t = run_cli("giambelli -k 2 -n 5 --class 2,1");
    CHECK(t.code == 0);
    CHECK(t.out ==
          "class: σ(2,1)\n"
          "indices: (2,4)\n"
          "delta: T1*T2 - T3\n"
          "vector: e(2,4)\n");

    RunResult j = run_cli("giambelli -k 2 -n 5 --class 2,1 --format json");
    CHECK(j.code == 0);
    CHECK(j.out == json_doc(R"({
        "class": "2,1",
        "indices": [2, 4],
        "delta": "T1*T2 - T3",
        "vector": [{"indices": [2, 4], "coeff": "1"}]
    })"));

    CHECK(run_cli("giambelli -k 2 -n 4 --p quantum --class 2,2").out ==
          "class: σ(2,2)\n"
          "indices: (3,4)\n"
          "delta: -T1*T3 + T2^2\n"
          "vector: e(3,4)\n");
}

TEST_CASE("constants subcommand") {
    RunResult t = run_cli("constants -k 2 -n 4 --p quantum --max-weight 2");
    CHECK(t.code == 0);
    CHECK(t.out ==
          "σ() * σ() = σ()\n"
          "σ(1) * σ() = σ(1)\n"
          "σ(1) * σ(1) = σ(2) + σ(1,1)\n"
          "σ(2) * σ() = σ(2)\n"
          "σ(1,1) * σ() = σ(1,1)\n");

    RunResult j = run_cli("constants -k 2 -n 4 --p quantum --max-weight 4 --format json");
    CHECK(j.code == 0);
    nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(j.out);
    REQUIRE(parsed.is_array());
    bool found = false;
    for (const auto& row : parsed)
        if (row["lhs"] == "2,1" && row["rhs"] == "1") {
            found = true;
            CHECK(row["result"] == nlohmann::ordered_json::parse(
                                       R"([{"partition": "2,2", "coeff": "1"},
                                           {"partition": "", "coeff": "q"}])"));
        }
    CHECK(found);
    CHECK(run_cli("constants -k 2 -n 4 --p quantum --max-weight 4 --format json").out == j.out);
}

TEST_CASE("output goes to a file when requested") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "schubert_cli_present.json";
    fs::remove(path);
    RunResult r = run_cli("present -k 2 -n 4 --p quantum --format json --output " +
                          path.string());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body == run_cli("present -k 2 -n 4 --p quantum --format json").out);
    fs::remove(path);
}

TEST_CASE("usage problems exit with 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("multiply -k 2 -n 4 --lhs 1").code == 2);
    CHECK(run_cli("present -k 3 -n 2").code == 2);
    CHECK(run_cli("present -k 0 -n 4").code == 2);
    CHECK(run_cli("present -k 2 -n 4 --format xml").code == 2);
    CHECK(run_cli("present -k 2 -n 4 --ring q").code == 2);
    CHECK(run_cli("present -k 2 -n 4 --ring T1:1").code == 2);
    CHECK(run_cli("present -k 2 -n 4 --ring X:1").code == 2);
    CHECK(run_cli("present -k 2 -n 4 --p quantum --ring q:4").code == 2);
    CHECK(run_cli("pieri -k 2 -n 4 --order -1 --class 1").code == 2);

    RunResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("present") != std::string::npos);
}

TEST_CASE("computation problems exit with 3") {
    CHECK(run_cli("present -k 2 -n 4 --ring q:4 --p '2*X^4 + q'").code == 3);
    CHECK(run_cli("present -k 2 -n 4 --p 'X^5'").code == 3);
    CHECK(run_cli("present -k 2 -n 4 --p 'X^4 + t'").code == 3);
    CHECK(run_cli("multiply -k 2 -n 4 --lhs 3 --rhs 1").code == 3);
    CHECK(run_cli("multiply -k 2 -n 4 --lhs 1,2 --rhs 1").code == 3);
}
