#include <doctest.h>

#include <random>

#include "qtwist/tensor.hpp"

using namespace qtwist;

namespace {

std::mt19937_64 rng(17);

GenId random_gen() {
    static const std::vector<GenId> pool = [] {
        std::vector<GenId> gens;
        for (GenKind k : {GenKind::E, GenKind::F, GenKind::G, GenKind::H})
            for (int a = -2; a <= 2; ++a)
                for (int b = -2; b <= 2; ++b) {
                    if ((k == GenKind::G || k == GenKind::H) && a == 0 && b == 0) continue;
                    gens.push_back(GenId::make(k, a, b));
                }
        gens.push_back(GenId::d());
        gens.push_back(GenId::d1());
        gens.push_back(GenId::d2());
        return gens;
    }();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

UElt random_monomial(int max_len = 3) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::vector<GenId> word;
    for (int i = 0, n = len(rng); i < n; ++i) word.push_back(random_gen());
    return straighten(word, LaurentQ(1));
}

UElt random_uelt() {
    UElt x = random_monomial();
    std::uniform_int_distribution<int> extra(0, 1), num(-3, 3);
    if (extra(rng)) x += LaurentQ(num(rng)) * random_monomial(2);
    return x;
}

}  // namespace

TEST_SUITE("uea") {

TEST_CASE("pbw monomial invariants") {
    CHECK_NOTHROW(PBWMono({GenId::d1(), GenId::d(), GenId::e(0, 0)}));
    CHECK_THROWS_AS(PBWMono({GenId::e(0, 0), GenId::d()}), std::invalid_argument);
    CHECK(PBWMono{}.is_unit());
}

TEST_CASE("straighten examples") {
    CHECK(straighten({GenId::e(0, 0)}) == UElt::gen(GenId::e(0, 0)));

    // f_(1,0) e_(0,0) = e_(0,0) f_(1,0) - [e_(0,0), f_(1,0)]
    //                 = e_(0,0) f_(1,0) - g_(1,0) + h_(1,0)
    UElt got = straighten({GenId::f(1, 0), GenId::e(0, 0)});
    UElt expected = UElt::mono(PBWMono({GenId::e(0, 0), GenId::f(1, 0)})) -
                    UElt::gen(GenId::g(1, 0)) + UElt::gen(GenId::h(1, 0));
    CHECK(got == expected);

    CHECK(straighten({GenId::d(), GenId::e(1, 1)}) ==
          UElt::mono(PBWMono({GenId::d(), GenId::e(1, 1)})));
}

TEST_CASE("normal form is idempotent") {
    for (int trial = 0; trial < 40; ++trial) {
        UElt x = random_uelt();
        UElt renorm;
        for (const auto& [mono, c] : x.terms()) renorm += straighten(mono.factors(), c);
        CHECK(renorm == x);
    }
}

TEST_CASE("multiplication") {
    UElt x = random_uelt();
    CHECK(UElt::one() * x == x);
    CHECK(x * UElt::one() == x);

    // e_(0,0) f_(0,0) - f_(0,0) e_(0,0) = [e_(0,0), f_(0,0)] = d
    UElt comm = UElt::gen(GenId::e(0, 0)) * UElt::gen(GenId::f(0, 0)) -
                UElt::gen(GenId::f(0, 0)) * UElt::gen(GenId::e(0, 0));
    CHECK(comm == UElt::gen(GenId::d()));

    for (int trial = 0; trial < 25; ++trial) {
        UElt a = random_monomial(), b = random_monomial(), c = random_monomial();
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("primitive coproduct") {
    Tensor2 de = delta0(UElt::gen(GenId::e(1, 0)));
    Tensor2 expected = tensor_of(UElt::gen(GenId::e(1, 0)), UElt::one()) +
                       tensor_of(UElt::one(), UElt::gen(GenId::e(1, 0)));
    CHECK(de == expected);

    CHECK(delta0(UElt::one()) == Tensor2::one());

    UElt dd = UElt::gen(GenId::d()) * UElt::gen(GenId::d());
    Tensor2 exp_dd = tensor_of(dd, UElt::one()) +
                     LaurentQ(2) * tensor_of(UElt::gen(GenId::d()), UElt::gen(GenId::d())) +
                     tensor_of(UElt::one(), dd);
    CHECK(delta0(dd) == exp_dd);
}

TEST_CASE("coproduct laws") {
    for (int trial = 0; trial < 15; ++trial) {
        UElt x = random_monomial(), y = random_monomial(2);
        // coassociativity, exact in finite tensors
        CHECK(delta0_on_leg(delta0(x), 0) == delta0_on_leg(delta0(x), 1));
        // algebra map
        CHECK(delta0(x * y) == delta0(x) * delta0(y));
        CHECK(counit0(x * y) == counit0(x) * counit0(y));
        // counit
        CHECK(counit0_on_leg(delta0(x), 0) == x);
        CHECK(counit0_on_leg(delta0(x), 1) == x);
        // antipode identity
        Tensor2 sdx = antipode0_on_leg(delta0(x), 0);
        CHECK(mul_legs(sdx) == counit0(x) * UElt::one());
    }
}

TEST_CASE("undeformed antipode") {
    CHECK(antipode0(UElt::gen(GenId::e(1, 0))) == -UElt::gen(GenId::e(1, 0)));
    CHECK(antipode0(UElt::one()) == UElt::one());
    for (int trial = 0; trial < 20; ++trial) {
        UElt x = random_monomial(), y = random_monomial();
        CHECK(antipode0(x * y) == antipode0(y) * antipode0(x));
    }
}

TEST_CASE("counit") {
    CHECK(counit0(UElt::gen(GenId::e(1, 0))).is_zero());
    CHECK(counit0(UElt::one()).is_one());
    UElt mixed = UElt::scalar(LaurentQ(3)) +
                 UElt::gen(GenId::d()) * UElt::gen(GenId::e(1, 1));
    CHECK(counit0(mixed) == LaurentQ(3));
}

TEST_CASE("rising and falling factorials") {
    UElt T = UElt::gen(GenId::d1());
    CHECK(rising(T, 0, 2) == T * (T + UElt::one()));
    CHECK(falling(T, 0, 0) == UElt::one());
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Rational a = rat(num(rng), den(rng));
        for (unsigned r = 0; r <= 4; ++r) CHECK(falling(T, a, r) == rising(T, a - r + 1, r));
    }
}

TEST_CASE("tensor products") {
    UElt x = random_monomial(), y = random_monomial();
    CHECK(Tensor2::one() * tensor_of(x, y) == tensor_of(x, y));

    UElt T = UElt::gen(GenId::d1()), E = UElt::gen(GenId::g(1, 1));
    CHECK(tensor_of(T, E) * tensor_of(T, E) == tensor_of(T * T, E * E));

    UElt e = UElt::gen(GenId::e(0, 0)), f = UElt::gen(GenId::f(0, 0));
    CHECK(tensor_of(e, UElt::one()) * tensor_of(UElt::one(), f) == tensor_of(e, f));
}

TEST_CASE("leg maps") {
    UElt x = random_monomial(), y = random_monomial();
    Tensor2 t = tensor_of(x, y);
    CHECK(counit0_on_leg(t, 0) == counit0(x) * y);

    // (Id x Delta0) sends x (x) L to x (x) L (x) 1 + x (x) 1 (x) L
    GenId L = GenId::e(1, 0);
    Tensor3 got = delta0_on_leg(tensor_of(x, UElt::gen(L)), 1);
    Tensor3 expected = tensor_of(x, UElt::gen(L), UElt::one()) +
                       tensor_of(x, UElt::one(), UElt::gen(L));
    CHECK(got == expected);

    CHECK(antipode0_on_leg(Tensor2::one(), 0) == Tensor2::one());
}

TEST_CASE("tau on the enveloping algebra") {
    UElt prod = UElt::gen(GenId::e(1, 0)) * UElt::gen(GenId::f(0, 1));
    UElt expected = UElt::gen(GenId::f(1, 0)) * UElt::gen(GenId::e(0, 1));
    CHECK(tau_u(prod) == expected);
    CHECK(tau_u(UElt::one()) == UElt::one());
    for (int trial = 0; trial < 20; ++trial) {
        UElt x = random_uelt();
        CHECK(tau_u(tau_u(x)) == x);
    }
    // algebra automorphism
    for (int trial = 0; trial < 10; ++trial) {
        UElt a = random_monomial(), b = random_monomial();
        CHECK(tau_u(a * b) == tau_u(a) * tau_u(b));
    }
}

TEST_CASE("rendering") {
    UElt x = UElt::mono(PBWMono({GenId::e(0, 0), GenId::f(1, 0)}),
                        LaurentQ(1) - LaurentQ::q_pow(1));
    CHECK(x.to_string() == "(1 - q)*e[0,0]*f[1,0]");
    CHECK(UElt::zero().to_string() == "0");
    CHECK((-UElt::gen(GenId::d())).to_string() == "-d");
}

}  // TEST_SUITE
