// End-to-end checks against the installed binary (path in CUBESUM_BIN).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CUBESUM_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CUBESUM_BIN must point at the cubesum binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("verify maps outcomes to exit codes") {
    RunResult r = run_cli("verify --set '[1,2,2,4]'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[1,2,2,4] sum=9 cube_sum=81\n");

    CHECK(run_cli("verify --set '[1,2,4]'").exit_code == 1);
    CHECK(run_cli("verify --set '[-2,1,2]'").exit_code == 1);
    CHECK(run_cli("verify").exit_code == 2);         // missing required flag
    CHECK(run_cli("no-such-command").exit_code == 2);
}

TEST_CASE("bare comma lists are accepted, output stays canonical") {
    RunResult r = run_cli("verify --set '9,-8,1,5,-7'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 15) == "[-8,-7,1,5,9] s");
}

TEST_CASE("enumerate count and threading determinism") {
    RunResult count = run_cli("enumerate --n 6 --count-only");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "18\n");

    RunResult seq = run_cli("enumerate --n 6 --threads 1");
    RunResult par = run_cli("enumerate --n 6");
    RunResult par8 = run_cli("enumerate --n 6 --threads 8");
    CHECK(seq.exit_code == 0);
    CHECK(seq.out == par.out);   // byte-identical
    CHECK(seq.out == par8.out);
}

TEST_CASE("text and json report the same sets") {
    RunResult text = run_cli("enumerate --n 3");
    CHECK(text.out == "[1,2,3]\n[3,3,3]\n");
    RunResult js = run_cli("enumerate --n 3 --json");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"count\": 2") != std::string::npos);
    CHECK(js.out.find("\"1\"") != std::string::npos);
    CHECK(js.out.find("\"3\"") != std::string::npos);
}

TEST_CASE("domain failures exit 1") {
    CHECK(run_cli("chain --set '[1,2,2,4]' --steps 1 --root pos").exit_code == 1);
    CHECK(run_cli("zerosum-search --n 3 --bound 20").out.empty());
    CHECK(run_cli("zerosum-search --n 3 --bound 20").exit_code == 0);
}

TEST_CASE("gen subcommands emit one literal per line") {
    RunResult r = run_cli("gen prop7 --count 2");
    CHECK(r.out == "[-8,-7,1,5,9]\n[-65,-64,9,43,77]\n");
    r = run_cli("gen frolov --triple 3,4,5 --c 6");
    CHECK(r.out == "[-11,-6,-6,-1,2,3,9,10]\n");
    r = run_cli("gen distinct --n 6 --index 0");
    CHECK(r.exit_code == 0);
}

TEST_CASE("catalog add respects --catalog and CUBESUM_CATALOG") {
    std::string path = "cubesum_test_cli_catalog.jsonl";
    std::remove(path.c_str());
    RunResult add = run_cli("catalog add --set '[1,2,3]' --tag t --catalog " + path);
    CHECK(add.out == "added\n");
    RunResult dup = run_cli("catalog add --set '[3,2,1]' --tag u --catalog " + path);
    CHECK(dup.out == "duplicate\n");
    RunResult list = run_cli("catalog list --catalog " + path);
    CHECK(list.out == "[1,2,3]\n");

    const char* bin = std::getenv("CUBESUM_BIN");
    std::string via_env = "CUBESUM_CATALOG=" + path + " " + std::string(bin) +
                          " catalog list 2>/dev/null";
    FILE* pipe = popen(via_env.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 256> buf;
    std::string out;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out == "[1,2,3]\n");
    std::remove(path.c_str());
}
