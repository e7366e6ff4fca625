#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(EMVKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string G = std::string(EMVKIT_GOLDEN_DIR) + "/";

}  // namespace

TEST_CASE("golden reports are byte-identical") {
    const struct {
        const char* args;
        const char* expected;
    } cases[] = {
        {"verify %sprod_c2_c1.json", "verify.expected.json"},
        {"morphisms %sprod_c2_c1.json", "morphisms.expected.json"},
        {"decompose %sprod_c2_c1.json --state %sstate_mix.json", "decompose.expected.json"},
        {"extend %sprod_c2_c1.json --sub %ssub_top.json --state %sstate_sub.json",
         "extend.expected.json"},
    };
    for (const auto& c : cases) {
        std::string args = c.args;
        std::string::size_type pos;
        while ((pos = args.find("%s")) != std::string::npos) args.replace(pos, 2, G);
        CAPTURE(args);
        const RunResult first = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == slurp(G + c.expected));
        // repeated runs must not drift by a byte
        CHECK(run_cli(args).output == first.output);
    }
}

TEST_CASE("violated input yields exit code 2 and a machine-readable error") {
    // a non-additive state cannot be decomposed
    const std::string bad = G + "tmp_bad_state.json";
    {
        std::ofstream out(bad);
        out << R"j({"values":{"(0,0)":"0","(0,1)":"1/2","(1,0)":"1/4","(1,1)":"1/2","(2,0)":"1/2","(2,1)":"1"}})j";
    }
    const RunResult r = run_cli("decompose " + G + "prod_c2_c1.json --state " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("\"error\"") != std::string::npos);
    CHECK(r.output.find("NotAState") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("EMVKIT_MAX_CARRIER caps finite carriers") {
    const std::string cmd = "EMVKIT_MAX_CARRIER=4 " + std::string(EMVKIT_CLI_PATH) + " verify " +
                            G + "prod_c2_c1.json 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    CHECK(WEXITSTATUS(pclose(pipe)) == 2);
    CHECK(out.find("CarrierTooLarge") != std::string::npos);
}

TEST_CASE("morphism-mode extension through the CLI") {
    const RunResult r = run_cli("extend " + G + "prod_c2_c1.json --sub " + G +
                                "sub_top.json --state " + G + "state_sub.json --morphism");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"morphism_mode\": true") != std::string::npos);
}

TEST_CASE("usage errors yield exit code 1") {
    CHECK(run_cli("decompose /nonexistent.json --state /nonexistent.json").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("morphisms").exit_code == 1);
}
