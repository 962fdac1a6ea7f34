#include <doctest.h>

#include <random>

#include "qtwist/liealg.hpp"

using namespace qtwist;

namespace {

std::vector<GenId> window(int w) {
    std::vector<GenId> gens;
    for (GenKind k : {GenKind::E, GenKind::F, GenKind::G, GenKind::H})
        for (int a = -w; a <= w; ++a)
            for (int b = -w; b <= w; ++b) {
                if ((k == GenKind::G || k == GenKind::H) && a == 0 && b == 0) continue;
                gens.push_back(GenId::make(k, a, b));
            }
    gens.push_back(GenId::d());
    gens.push_back(GenId::d1());
    gens.push_back(GenId::d2());
    return gens;
}

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE("generator construction rules") {
    CHECK_THROWS_AS(GenId::g(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GenId::h(0, 0), std::invalid_argument);
    CHECK_NOTHROW(GenId::e(0, 0));
    CHECK(GenId::e(1, 2).to_string() == "e[1,2]");
    CHECK(GenId::d1().to_string() == "d1");
}

TEST_CASE("bracket table values") {
    // [d, e_m] = 2 e_m
    CHECK(bracket(GenId::d(), GenId::e(2, 3)) == LieElt::gen(GenId::e(2, 3), LaurentQ(2)));
    // root vectors of one family commute
    CHECK(bracket(GenId::e(1, 0), GenId::e(5, 7)).is_zero());
    // [g_(1,0), g_(0,1)] = (q^0 - q^1) g_(1,1) = (1 - q) g_(1,1)
    LieElt gg = bracket(GenId::g(1, 0), GenId::g(0, 1));
    CHECK(gg == LieElt::gen(GenId::g(1, 1), LaurentQ(1) - LaurentQ::q_pow(1)));
    // [e_(1,2), f_(-1,-2)] = q^{2*(-1)} d
    CHECK(bracket(GenId::e(1, 2), GenId::f(-1, -2)) ==
          LieElt::gen(GenId::d(), LaurentQ::q_pow(-2)));
    // degree derivation
    CHECK(bracket(GenId::d1(), GenId::e(2, 3)) == LieElt::gen(GenId::e(2, 3), LaurentQ(2)));
    // the convention: [e_(1,0), f_(-1,1)] lands in degree (0,1), both parts exist
    LieElt ef = bracket(GenId::e(1, 0), GenId::f(-1, 1));
    CHECK(ef.terms().size() == 2);
}

TEST_CASE("bracket bilinearity") {
    std::mt19937_64 rng(3);
    auto gens = window(1);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        LieElt x = LieElt::gen(gens[pick(rng)], LaurentQ::q_pow(1)) +
                   LieElt::gen(gens[pick(rng)], LaurentQ(3));
        CHECK(bracket_lin(x, x).is_zero());
        CHECK(bracket_lin(LieElt(), x).is_zero());
    }
    LieElt e00_f00 = LieElt::gen(GenId::e(0, 0)) + LieElt::gen(GenId::f(0, 0));
    LieElt expected = LieElt::gen(GenId::e(0, 0), LaurentQ(-2)) +
                      LieElt::gen(GenId::f(0, 0), LaurentQ(2));
    CHECK(bracket_lin(e00_f00, LieElt::gen(GenId::d())) == expected);
}

TEST_CASE("antisymmetry, jacobi, grading on a window") {
    auto gens = window(1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            CHECK(bracket(gens[i], gens[j]) == -bracket(gens[j], gens[i]));
            LieElt br = bracket(gens[i], gens[j]);
            for (const auto& [id, c] : br.terms()) CHECK(id.deg == gens[i].deg + gens[j].deg);
        }
    }
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        GenId a = gens[pick(rng)], b = gens[pick(rng)], c = gens[pick(rng)];
        LieElt jac = bracket_lin(bracket(a, b), LieElt::gen(c)) +
                     bracket_lin(bracket(b, c), LieElt::gen(a)) +
                     bracket_lin(bracket(c, a), LieElt::gen(b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("involution") {
    CHECK(tau(LieElt::gen(GenId::e(1, 2))) == LieElt::gen(GenId::f(1, 2)));
    CHECK(tau(LieElt::gen(GenId::d())) == LieElt::gen(GenId::d(), LaurentQ(-1)));
    CHECK(tau(LieElt::gen(GenId::d1())) == LieElt::gen(GenId::d1()));

    std::mt19937_64 rng(9);
    auto gens = window(1);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        LieElt x = LieElt::gen(gens[pick(rng)], LaurentQ::q_pow(-1)) +
                   LieElt::gen(gens[pick(rng)], LaurentQ(rat(1, 2)));
        CHECK(tau(tau(x)) == x);
    }

    // Lie homomorphism over the window
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
            CHECK(tau(bracket(gens[i], gens[j])) ==
                  bracket_lin(tau(LieElt::gen(gens[i])), tau(LieElt::gen(gens[j]))));
}

TEST_CASE("structure mutation hook") {
    LieElt base = bracket(GenId::g(1, 0), GenId::e(0, 1));
    set_structure_mutation(QExpMutation{QExpSite::GE, 1});
    LieElt mutated = bracket(GenId::g(1, 0), GenId::e(0, 1));
    set_structure_mutation(std::nullopt);
    CHECK(!(base == mutated));
    CHECK(bracket(GenId::g(1, 0), GenId::e(0, 1)) == base);
}

}  // TEST_SUITE
