#include <doctest.h>

#include <set>

#include "qtwist/verify.hpp"

using namespace qtwist;

namespace {

// Small deterministic grid so coverage tests stay fast.
GridParams small_grid() {
    GridParams p;
    p.order = 2;
    p.n_list = {{1, 1}};
    p.c_list = {Rational(0), Rational(1)};
    p.m_list = {{1, 0}, {0, 1}};
    p.degree_window = 1;
    p.hopf_window = 1;
    p.ladder_power = 2;
    p.factorial_span = 3;
    return p;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("default x rule") {
    CHECK(default_x({1, 1}) == std::pair<Rational, Rational>{1, 0});
    CHECK(default_x({0, 1}) == std::pair<Rational, Rational>{0, 1});
    CHECK(default_x({2, -1}) == std::pair<Rational, Rational>{rat(1, 2), 0});
    CHECK_THROWS_AS(default_x({0, 0}), std::invalid_argument);
}

TEST_CASE("unknown suite") {
    CHECK_THROWS_AS(run_suite("no-such-suite", small_grid()), std::invalid_argument);
}

TEST_CASE("suites are deterministic") {
    GridParams p = small_grid();
    auto a = run_suite("lemma24", p);
    auto b = run_suite("lemma24", p);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].item == b[i].item);
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("soundness suites are green") {
    GridParams p = small_grid();
    for (const std::string& name : {"liealg", "lemma21", "lemma24", "cocycle", "noncocomm"}) {
        for (const CheckResult& r : run_suite(name, p)) {
            INFO(r.item << ": " << r.detail);
            CHECK(r.verdict == Verdict::Pass);
        }
    }
}

TEST_CASE("manifest coverage") {
    GridParams p = small_grid();
    Summary summary = run_all(p);
    CHECK(summary.failed == 0);

    std::vector<std::string> uncovered;
    for (const std::string& label : identity_manifest()) {
        bool found = false;
        for (const CheckResult& r : summary.results) {
            if (r.item.rfind(label, 0) == 0) {
                found = true;
                break;
            }
        }
        if (!found) uncovered.push_back(label);
    }
    INFO("uncovered labels: " << [&] {
        std::string s;
        for (const auto& l : uncovered) s += l + " ";
        return s;
    }());
    CHECK(uncovered.empty());
}

TEST_CASE("order zero degenerates to the undeformed checks") {
    GridParams p = small_grid();
    p.order = 0;
    Summary summary = run_all(p);
    CHECK(summary.failed == 0);
    // Every series comparison collapses to its t^0 part. The one stated form
    // whose t^0 term already deviates is the last antipode branch of the
    // sixth block (its lowering generator is misprinted), so those findings
    // remain even here.
    for (const CheckResult& r : summary.results) {
        if (r.verdict != Verdict::PaperDiscrepancy) continue;
        bool known = r.item.rfind("coro.3:antipode@e[-1,-1]", 0) == 0 ||
                     r.item.rfind("transport:d-df:antipode-transport@e[-1,-1]", 0) == 0;
        INFO(r.item);
        CHECK(known);
    }
}

TEST_CASE("json lines are stable") {
    GridParams p = small_grid();
    auto results = run_suite("cocycle", p);
    REQUIRE(!results.empty());
    std::string j = results.front().to_json();
    CHECK(j.find("\"suite\":\"cocycle\"") != std::string::npos);
    CHECK(j.find("\"verdict\":\"pass\"") != std::string::npos);
}

}  // TEST_SUITE
