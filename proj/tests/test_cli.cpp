#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <sstream>

#include "adr/report.hpp"
#include "cli.hpp"

namespace {

std::string data(const std::string& name) { return std::string(ADRKIT_TEST_DATA_DIR) + "/" + name; }

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = adr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basis command") {
    auto r = run_cli({"basis", data("example22.alg")});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim A = 9, m = 3") != std::string::npos);
    auto rl = run_cli({"basis", data("loop.alg")});
    CHECK(rl.out.find("dim A = 5, m = 3") != std::string::npos);
    auto rs = run_cli({"--json", "basis", data("kx2.alg")});
    adr::Json j = adr::Json::parse(rs.out);
    CHECK(j["schema"] == 1);
    CHECK(j["dim_A"] == 2);
    CHECK(adr::Json::parse(j.dump()) == j);
}

TEST_CASE("stratify command") {
    auto r = run_cli({"--json", "stratify", data("example22.alg"), data("example22.mod")});
    REQUIRE(r.code == 0);
    adr::Json j = adr::Json::parse(r.out);
    CHECK(j["n_M"] == 4);
    CHECK(j["layers"].size() == 4);
    CHECK(j["layers"][1]["members"][0] == "P(1)");
}

TEST_CASE("verify command exit codes") {
    CHECK(run_cli({"verify", data("example22.alg"), data("example22.mod"), "--mode", "left"}).code == 0);
    CHECK(run_cli({"verify", data("loop.alg"), data("loop.mod"), "--mode", "rejective"}).code == 1);
    auto rs = run_cli({"verify", data("loop.alg"), data("loop.mod"), "--search"});
    CHECK(rs.code == 0);
    CHECK(rs.out.find("P(1) < P(1)/P(1)J^2 < P(1)/soc P(1)") != std::string::npos);
}

TEST_CASE("gldim command") {
    auto r = run_cli({"gldim", data("example22.alg"), data("example22.mod")});
    CHECK(r.code == 0);
    CHECK(r.out.find("gl B = 2, n_M = 4, classical bound 6") != std::string::npos);
}

TEST_CASE("thm2 command") {
    CHECK(run_cli({"thm2", data("kx4.alg")}).code == 0);
    auto r = run_cli({"--json", "thm2", data("example22.alg")});
    REQUIRE(r.code == 0);
    adr::Json j = adr::Json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["booleans"]["gldim_two"] == true);
    // semisimple input: LoewyLengthOne is a user error
    auto rs = run_cli({"thm2", data("doublearrow.alg")});
    CHECK(rs.code == 0);
}

TEST_CASE("qh command") {
    auto good = run_cli({"qh", data("loop.alg"), data("loop.mod"), "--order", data("loop_good.order")});
    CHECK(good.code == 0);
    CHECK(good.out.find("strongly QH:       true") != std::string::npos);
    auto len = run_cli({"qh", data("example22.alg"), data("example22.mod"), "--order",
                        data("example22_length.order")});
    CHECK(len.code == 1);
    CHECK(len.out.find("left-strongly QH:  false") != std::string::npos);
    auto adro = run_cli({"qh", data("example22.alg"), data("example22.mod"), "--order",
                         data("example22_adr.order")});
    CHECK(adro.out.find("left-strongly QH:  true") != std::string::npos);
}

TEST_CASE("search-chain command") {
    CHECK(run_cli({"search-chain", data("loop.alg"), data("loop.mod")}).code == 0);
    CHECK(run_cli({"search-chain", data("example22.alg"), data("example22.mod")}).code == 1);
}

TEST_CASE("fuzz command is deterministic") {
    auto a = run_cli({"--json", "fuzz", "--seed", "7", "--count", "6"});
    auto b = run_cli({"--json", "fuzz", "--seed", "7", "--count", "6"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    adr::Json j = adr::Json::parse(a.out);
    CHECK(j["instances"] == 6);
}

TEST_CASE("error exit codes") {
    CHECK(run_cli({"bogus"}).code == 64);
    CHECK(run_cli({"basis"}).code == 64);
    CHECK(run_cli({"basis", data("missing.alg")}).code == 65);
    // a relation on a single arrow is rejected as too short
    std::string tmp = std::string(ADRKIT_TEST_DATA_DIR) + "/../.." + "/build/short_rel.alg";
    {
        std::FILE* f = std::fopen(tmp.c_str(), "w");
        REQUIRE(f);
        std::fputs("quiver\nvertices: 1 2\narrow a: 1 -> 2\nrelations\nrel: a\n", f);
        std::fclose(f);
    }
    CHECK(run_cli({"basis", tmp}).code == 65);
}

TEST_CASE("the installed binary behaves like the library driver") {
#ifdef ADRKIT_TOOL_PATH
    std::string cmd = std::string(ADRKIT_TOOL_PATH) + " basis " + data("example22.alg") + " 2>/dev/null";
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[256];
    std::string out;
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    int status = pclose(pipe);
    CHECK(status == 0);
    CHECK(out.find("dim A = 9") != std::string::npos);
#endif
}
