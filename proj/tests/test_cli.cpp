#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "twoloop/knot_format.hpp"
#include "twoloop/print.hpp"

#ifndef TWOLOOP_CLI_PATH
#error "TWOLOOP_CLI_PATH must point at the two-loop binary"
#endif
#ifndef TWOLOOP_GOLDEN_DIR
#error "TWOLOOP_GOLDEN_DIR must point at the golden file directory"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(TWOLOOP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("twoloop_cli_" + name);
}

}  // namespace

TEST_CASE("torus subcommand") {
    CHECK(run_cli("torus 3 2 --what v3").output == "1\n");
    CHECK(run_cli("torus 3 2 --what v2").output == "-1\n");
    CHECK(run_cli("torus 7 2 --what theta-hat").output ==
          "3t^5 + 5t^3 + 6t + 6t^-1 + 5t^-3 + 3t^-5\n");
    CHECK(run_cli("torus 3 2 --what alexander").output == "t - 1 + t^-1\n");
    CHECK(run_cli("torus 3 2 --what theta").output == "2 0 1\n2 1 -1\n");
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(run_cli("torus 4 2 --what v3").exit_code == 1);
    CHECK(run_cli("torus 3 -2 --what v3").exit_code == 1);
    CHECK(run_cli("torus 3 2 --what bogus").exit_code == 1);
    CHECK(run_cli("torus 3 2").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("verify --pmax 1 --qmax 5").exit_code == 1);
}

TEST_CASE("table output matches the library renderers and the golden grid") {
    const twoloop::ThetaPolynomial theta72 = twoloop::torus_theta(7, 2);
    CHECK(run_cli("table 7 2 --layout grid").output ==
          twoloop::render_grid_table(theta72));
    CHECK(run_cli("table 7 2 --layout domain").output ==
          twoloop::render_domain_table(theta72));
    CHECK(run_cli("table 3 2 --layout domain").output ==
          twoloop::render_domain_table(twoloop::torus_theta(3, 2)));
    CHECK(run_cli("table 5 3 --layout domain").output ==
          twoloop::render_domain_table(twoloop::torus_theta(5, 3)));

    // byte-for-byte against the committed transcription
    const std::string golden =
        read_file(std::filesystem::path(TWOLOOP_GOLDEN_DIR) / "table_7_2_grid.txt");
    CHECK(run_cli("table 7 2 --layout grid").output == golden);
}

TEST_CASE("identical invocations produce identical bytes") {
    const CliResult first = run_cli("torus 9 5 --what theta-hat");
    const CliResult second = run_cli("torus 9 5 --what theta-hat");
    CHECK(first.output == second.output);
    CHECK(run_cli("table 7 2 --layout grid").output ==
          run_cli("table 7 2 --layout grid").output);
}

TEST_CASE("cable subcommand") {
    const auto in_path = temp_path("unknot.knot");
    const auto out_path = temp_path("cabled.knot");
    {
        std::ofstream out(in_path, std::ios::binary);
        out << twoloop::serialize_record(twoloop::builtin_record("unknot"));
    }

    const CliResult cable_result =
        run_cli("cable " + in_path.string() + " 3 2 -o " + out_path.string());
    CHECK(cable_result.exit_code == 0);
    CHECK(cable_result.output == "unknot^(3,2): v2 = -1, v3 = 1\n");
    CHECK(read_file(out_path) ==
          twoloop::serialize_record(twoloop::builtin_record("torus:3:2")));

    // cabling the trefoil by (2,3) reports v3 = 8
    const auto tref_path = temp_path("trefoil.knot");
    {
        std::ofstream out(tref_path, std::ios::binary);
        out << twoloop::serialize_record(twoloop::builtin_record("torus:3:2"));
    }
    const CliResult tref_result =
        run_cli("cable " + tref_path.string() + " 2 3 -o " + out_path.string());
    CHECK(tref_result.exit_code == 0);
    CHECK(tref_result.output.find("v3 = 8") != std::string::npos);

    // a (1, q) cable keeps the invariants of the input
    const CliResult identity_result =
        run_cli("cable " + tref_path.string() + " 1 5 -o " + out_path.string());
    CHECK(identity_result.exit_code == 0);
    const twoloop::KnotRecord roundtrip = twoloop::parse_record(read_file(out_path));
    CHECK(roundtrip.alexander == twoloop::builtin_record("torus:3:2").alexander);
    CHECK(roundtrip.theta == twoloop::builtin_record("torus:3:2").theta);

    std::filesystem::remove(in_path);
    std::filesystem::remove(tref_path);
    std::filesystem::remove(out_path);
}

TEST_CASE("parse and validation failures exit with status 2") {
    const auto bad_path = temp_path("bad.knot");
    {
        std::ofstream out(bad_path, std::ios::binary);
        out << "knot \"x\"\nalexander:\n  1 1\ntheta:\nend\n";  // asymmetric
    }
    const auto out_path = temp_path("unused.knot");
    CHECK(run_cli("cable " + bad_path.string() + " 3 2 -o " + out_path.string())
              .exit_code == 2);
    CHECK(run_cli("cable /nonexistent.knot 3 2 -o " + out_path.string()).exit_code == 2);
    std::filesystem::remove(bad_path);
}

TEST_CASE("verify subcommand") {
    // the range covering every published domain table
    const CliResult full = run_cli("verify --pmax 7 --qmax 4");
    CHECK(full.exit_code == 0);
    CHECK(full.output.find("FAIL") == std::string::npos);
    CHECK(full.output.find("PASS T(7,4): reference domain table") != std::string::npos);
    CHECK(full.output.find("10 pairs") != std::string::npos);

    const CliResult empty = run_cli("verify --pmax 2 --qmax 2");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("0 pairs") != std::string::npos);
}
