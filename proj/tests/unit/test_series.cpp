#include <doctest.h>

#include <random>

#include "qtwist/series.hpp"

using namespace qtwist;

TEST_SUITE("series") {

TEST_CASE("arithmetic") {
    const int N = 4;
    UElt T = UElt::gen(GenId::d1());

    USeries one_plus(N), one_minus(N);
    one_plus[0] = UElt::one();
    one_plus[1] = T;
    one_minus[0] = UElt::one();
    one_minus[1] = -T;

    USeries prod = one_plus * one_minus;
    CHECK(prod[0] == UElt::one());
    CHECK(prod[1].is_zero());
    CHECK(prod[2] == -(T * T));
    CHECK(prod[3].is_zero());

    CHECK(prod * USeries::one(N) == prod);

    // componentwise tensor variant
    UElt E = UElt::gen(GenId::e(1, 1));
    T2Series a(N), b(N);
    a[0] = Tensor2::one();
    a[1] = -tensor_of(T, E);
    b[0] = Tensor2::one();
    b[1] = tensor_of(T, E);
    T2Series tp = a * b;
    CHECK(tp[0] == Tensor2::one());
    CHECK(tp[1].is_zero());
    CHECK(tp[2] == -tensor_of(T * T, E * E));
}

TEST_CASE("mixed order truncates") {
    USeries a(4), b(2);
    a[0] = UElt::one();
    b[0] = UElt::one();
    a[3] = UElt::gen(GenId::d());
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
}

TEST_CASE("binomial series") {
    UElt E = UElt::gen(GenId::g(1, 1));
    USeries linear = one_minus_Et_pow(E, 1, 3);
    CHECK(linear[0] == UElt::one());
    CHECK(linear[1] == -E);
    CHECK(linear[2].is_zero());

    USeries geom = one_minus_Et_pow(E, -1, 3);
    CHECK(geom[2] == E * E);
    CHECK(geom[3] == E * E * E);

    USeries half = one_minus_Et_pow(E, rat(1, 2), 2);
    CHECK(half[1] == LaurentQ(rat(-1, 2)) * E);
    CHECK(half[2] == LaurentQ(rat(-1, 8)) * (E * E));
}

TEST_CASE("binomial series group law") {
    UElt E = UElt::gen(GenId::e(0, 1));
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Rational r = rat(num(rng), den(rng)), s = rat(num(rng), den(rng));
        CHECK(one_minus_Et_pow(E, r, 4) * one_minus_Et_pow(E, s, 4) ==
              one_minus_Et_pow(E, r + s, 4));
        CHECK(one_minus_Et_pow(E, r, 4) * one_minus_Et_pow(E, -r, 4) == USeries::one(4));
    }
}

TEST_CASE("inverse") {
    UElt E = UElt::gen(GenId::e(1, 0));
    USeries s = one_minus_Et_pow(E, 1, 5);
    CHECK(s.inverse() == one_minus_Et_pow(E, -1, 5));
    CHECK(USeries::one(3).inverse() == USeries::one(3));

    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> num(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        USeries a(3);
        a[0] = UElt::scalar(LaurentQ::q_pow(num(rng)));
        a[1] = LaurentQ(num(rng)) * UElt::gen(GenId::d());
        a[2] = LaurentQ(num(rng)) * UElt::gen(GenId::e(0, 1));
        CHECK(a.inverse().inverse() == a);
        CHECK(a * a.inverse() == USeries::one(3));
        CHECK(a.inverse() * a == USeries::one(3));
    }

    USeries bad(2);
    bad[0] = UElt::gen(GenId::d());
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
    USeries not_unit(2);
    not_unit[0] = UElt::scalar(LaurentQ(1) - LaurentQ::q_pow(1));
    CHECK_THROWS_AS(not_unit.inverse(), std::domain_error);
}

TEST_CASE("rendering") {
    UElt E = UElt::gen(GenId::e(0, 1));
    USeries s = one_minus_Et_pow(E, 1, 4);
    CHECK(s.to_string() == "1 - (e[0,1]) t + O(t^5)");
    CHECK(USeries(2).to_string() == "0 + O(t^3)");
}

}  // TEST_SUITE
