#include <doctest.h>

#include <random>

#include "qtwist/expr.hpp"

using namespace qtwist;

TEST_SUITE("expr") {

TEST_CASE("basic parses") {
    UElt prod = eval_expr("e[1,2]*f[-1,-2]");
    CHECK(prod == UElt::gen(GenId::e(1, 2)) * UElt::gen(GenId::f(-1, -2)));

    UElt scaled = eval_expr("(1 - q)*g[1,1]");
    CHECK(scaled == UElt::gen(GenId::g(1, 1), LaurentQ(1) - LaurentQ::q_pow(1)));

    CHECK(eval_expr("q^-2*d") == UElt::gen(GenId::d(), LaurentQ::q_pow(-2)));
    CHECK(eval_expr("d1") == UElt::gen(GenId::d1()));
    CHECK(eval_expr("3/2") == UElt::scalar(LaurentQ(rat(3, 2))));
    CHECK(eval_expr("-1 + q^2") ==
          UElt::scalar(LaurentQ::q_pow(2) - LaurentQ(1)));
    CHECK(eval_expr("e[0,1]^2") == u_pow(UElt::gen(GenId::e(0, 1)), 2));
    CHECK(eval_expr("(d + 1)^2") ==
          u_pow(UElt::gen(GenId::d()) + UElt::one(), 2));
}

TEST_CASE("diagnostics carry offsets") {
    try {
        parse_expr("e[1,");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
        CHECK(!e.expected().empty());
    }
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("e[1,2] f[0,0]"), ParseError);  // missing '*'
    CHECK_THROWS_AS(parse_expr("g[0,0]"), ParseError);
    CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
    CHECK_THROWS_AS(eval_expr("d^-1"), std::invalid_argument);
}

TEST_CASE("round trip on canonical renderings") {
    std::mt19937_64 rng(31);
    std::vector<GenId> pool = {GenId::e(0, 0),  GenId::e(1, -2), GenId::f(1, 0),
                               GenId::g(1, 1),  GenId::h(-1, 2), GenId::d(),
                               GenId::d1(),     GenId::d2()};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(0, 3), num(-3, 3), den(1, 2), expo(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        UElt x;
        for (int terms = 0; terms <= 2; ++terms) {
            std::vector<GenId> word;
            for (int i = 0, n = len(rng); i < n; ++i) word.push_back(pool[pick(rng)]);
            LaurentQ c;
            c.add(expo(rng), rat(num(rng), den(rng)));
            x += straighten(word, c);
        }
        std::string rendered = x.to_string();
        CAPTURE(rendered);
        CHECK(eval_expr(rendered) == x);
        // re-rendering is idempotent
        CHECK(eval_expr(rendered).to_string() == rendered);
    }
}

}  // TEST_SUITE
