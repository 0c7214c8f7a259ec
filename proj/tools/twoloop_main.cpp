// two-loop: exact 2-loop polynomial invariants of torus and cable knots.
//
// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
// 3 internal consistency failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "twoloop/knot_format.hpp"
#include "twoloop/print.hpp"
#include "twoloop/vassiliev.hpp"
#include "twoloop/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitConsistency = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw twoloop::ValidationError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw twoloop::ValidationError("cannot write '" + path + "'");
    out << content;
}

int run_torus(std::int64_t p, std::int64_t q, const std::string& what) {
    using namespace twoloop;
    if (what == "alexander") {
        std::cout << pretty(torus_alexander(p, q)) << "\n";
    } else if (what == "theta") {
        std::cout << render_domain_triples(torus_theta(p, q));
    } else if (what == "theta-hat") {
        std::cout << pretty(torus_theta_hat(p, q)) << "\n";
    } else if (what == "v2") {
        std::cout << v2(torus_record(p, q)).str() << "\n";
    } else {  // v3
        std::cout << v3(torus_record(p, q)).str() << "\n";
    }
    return 0;
}

int run_table(std::int64_t p, std::int64_t q, const std::string& layout) {
    using namespace twoloop;
    const ThetaPolynomial theta = torus_theta(p, q);
    std::cout << (layout == "grid" ? render_grid_table(theta)
                                   : render_domain_table(theta));
    return 0;
}

int run_cable(const std::string& input_path, std::int64_t p, std::int64_t q,
              const std::string& output_path) {
    using namespace twoloop;
    const KnotRecord base = parse_record(read_file(input_path));
    const KnotRecord cabled = cable_record(base, p, q);
    write_file(output_path, serialize_record(cabled));
    std::cout << cabled.name << ": v2 = " << v2(cabled).str()
              << ", v3 = " << v3(cabled).str() << "\n";
    return 0;
}

int run_verify(std::int64_t pmax, std::int64_t qmax) {
    using namespace twoloop;
    const VerifyReport report = run_verification(pmax, qmax);
    for (const auto& check : report.checks) {
        if (check.passed) {
            std::cout << "PASS " << check.name;
            if (!check.detail.empty()) std::cout << " [" << check.detail << "]";
            std::cout << "\n";
        } else {
            std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
        }
    }
    std::size_t failed = 0;
    for (const auto& check : report.checks)
        if (!check.passed) ++failed;
    std::cout << report.pair_count << " pairs, " << report.checks.size()
              << " checks, " << failed << " failed\n";
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 2-loop polynomial invariants of torus and cable knots"};
    app.require_subcommand(1);

    std::int64_t p = 0, q = 0;
    std::string what;
    std::string layout = "grid";
    std::string input_path, output_path;
    std::int64_t pmax = 0, qmax = 0;

    auto* torus = app.add_subcommand("torus", "Invariants of the torus knot T(p,q)");
    torus->add_option("p", p, "longitude winding")->required();
    torus->add_option("q", q, "meridian winding")->required();
    torus->add_option("--what", what, "alexander|theta|theta-hat|v2|v3")
        ->required()
        ->check(CLI::IsMember({"alexander", "theta", "theta-hat", "v2", "v3"}));

    auto* table = app.add_subcommand("table", "Coefficient table of the 2-loop polynomial");
    table->add_option("p", p, "longitude winding")->required();
    table->add_option("q", q, "meridian winding")->required();
    table->add_option("--layout", layout, "grid|domain (default grid)")
        ->check(CLI::IsMember({"grid", "domain"}));

    auto* cable = app.add_subcommand("cable", "Cable a knot record file");
    cable->add_option("input", input_path, "input .knot file")->required();
    cable->add_option("p", p, "longitude winding")->required();
    cable->add_option("q", q, "meridian winding")->required();
    cable->add_option("-o,--output", output_path, "output .knot file")->required();

    auto* verify = app.add_subcommand("verify", "Run the cross-identity suite");
    verify->add_option("--pmax", pmax, "largest p (>= 2)")->required();
    verify->add_option("--qmax", qmax, "largest q (>= 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (torus->parsed()) return run_torus(p, q, what);
        if (table->parsed()) return run_table(p, q, layout);
        if (cable->parsed()) return run_cable(input_path, p, q, output_path);
        if (verify->parsed()) {
            if (pmax < 2 || qmax < 2) {
                std::cerr << "error: --pmax and --qmax must be >= 2\n";
                return kExitUsage;
            }
            return run_verify(pmax, qmax);
        }
    } catch (const twoloop::InvalidParamsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const twoloop::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const twoloop::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const twoloop::UnknownBuiltinError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const twoloop::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConsistency;
    }
    return 0;
}
