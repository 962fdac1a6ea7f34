#include <doctest.h>

#include <sstream>

#include "qtwist/cli.hpp"

using namespace qtwist;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bracket command") {
    CliRun r = run_cli({"bracket", "e[1,2]", "f[-1,-2]"});
    CHECK(r.code == 0);
    CHECK(r.out == "q^-2*d\n");

    CliRun bad = run_cli({"bracket", "e[1,2]*e[1,2]", "d"});
    CHECK(bad.code == 2);
}

TEST_CASE("nf command") {
    CliRun r = run_cli({"nf", "f[1,0]*e[0,0]"});
    CHECK(r.code == 0);
    CHECK(r.out == "-g[1,0] + h[1,0] + e[0,0]*f[1,0]\n");

    CliRun syntax = run_cli({"nf", "e[1,"});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("offset 4") != std::string::npos);
}

TEST_CASE("delta command") {
    CliRun r = run_cli({"delta", "--case", "e", "--n", "0,1", "--x", "0,1", "--order", "2",
                        "e[0,1]"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1⊗e[0,1] + e[0,1]⊗1 - (e[0,1]⊗e[0,1]) t + O(t^3)\n");
}

TEST_CASE("context validation errors are usage errors") {
    CliRun r = run_cli({"delta", "--case", "e", "--n", "0,1", "--x", "1,2", "--order", "2",
                        "e[0,1]"});
    CHECK(r.code == 2);
    CHECK(r.err.find("x1*n1 + x2*n2 = 1") != std::string::npos);

    CliRun g0 = run_cli({"twist", "--case", "g", "--n", "0,0", "--x", "1,0"});
    CHECK(g0.code == 2);
}

TEST_CASE("json output is schema stable") {
    std::vector<std::string> args = {"--format", "json", "nf", "f[1,0]*e[0,0]"};
    CliRun first = run_cli(args);
    CliRun second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out ==
          R"({"result":[{"coeff":"-1","monomial":["g[1,0]"]},{"coeff":"1","monomial":["h[1,0]"]},)"
          R"({"coeff":"1","monomial":["e[0,0]","f[1,0]"]}]})"
          "\n");
}

TEST_CASE("check command exit codes") {
    CliRun r = run_cli({"check", "--suite", "lemma21", "--order", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failed") != std::string::npos);

    CliRun unknown = run_cli({"check", "--suite", "bogus"});
    CHECK(unknown.code == 2);

    CliRun listing = run_cli({"check", "--list"});
    CHECK(listing.code == 0);
    CHECK(listing.out.find("thm1-case2") != std::string::npos);
}

TEST_CASE("twist command") {
    CliRun r = run_cli({"twist", "--case", "g", "--n", "1,1", "--x", "1,0", "--order", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1⊗1 - (d1⊗g[1,1]) t + O(t^2)\n");

    CliRun inv = run_cli({"twist", "--case", "g", "--n", "1,1", "--x", "1,0", "--order", "1",
                          "--inverse"});
    CHECK(inv.out == "1⊗1 + (d1⊗g[1,1]) t + O(t^2)\n");
}

}  // TEST_SUITE
