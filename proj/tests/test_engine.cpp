#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "metacyclic/engine.hpp"

using namespace metacyclic;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(make_params(20, 4, 8, 11));  // s need not divide m
    CHECK_THROWS_AS(make_params(2, 2, 2, 0), std::invalid_argument);   // gcd(t,m) != 1
    CHECK_THROWS_AS(make_params(5, 2, 5, 2), std::invalid_argument);   // t^n != 1
    CHECK_THROWS_AS(make_params(8, 2, 1, 3), std::invalid_argument);   // s(t-1) != 0
    CHECK_THROWS_AS(make_params(0, 1, 1, 0), std::invalid_argument);
    auto p = make_params(6, 2, 9, 5);
    CHECK(p.s == 3);  // s reduced into [1, m]
    CHECK(p.t == 5);
    CHECK(params_valid(20, 4, 8, 11));
    CHECK_FALSE(params_valid(2, 2, 2, 0));
}

TEST_CASE("group axioms on sampled groups") {
    for (int trial = 0; trial < 12; ++trial) {
        auto params = testutil::random_params(60);
        Group G(params);
        auto elems = G.all_elements();
        CHECK(elems.size() == G.size());
        for (const Elem& x : elems) {
            CHECK(G.mul(x, G.identity()) == x);
            CHECK(G.mul(G.identity(), x) == x);
            CHECK(G.mul(x, G.inverse(x)) == G.identity());
            CHECK(G.decode(G.encode(x)) == x);
        }
        // Associativity: exhaustive for tiny groups, sampled otherwise.
        if (G.size() <= 12) {
            for (const Elem& x : elems)
                for (const Elem& y : elems)
                    for (const Elem& z : elems)
                        CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
        } else {
            for (int k = 0; k < 300; ++k) {
                Elem x = G.decode(testutil::pick(0, G.size() - 1));
                Elem y = G.decode(testutil::pick(0, G.size() - 1));
                Elem z = G.decode(testutil::pick(0, G.size() - 1));
                CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
            }
        }
    }
}

TEST_CASE("defining relations hold") {
    for (int trial = 0; trial < 25; ++trial) {
        auto params = testutil::random_params(150);
        Group G(params);
        Elem a = G.gen_a(), b = G.gen_b();
        CHECK(G.power(a, static_cast<i64>(params.m)) == G.identity());
        CHECK(G.power(b, static_cast<i64>(params.n)) ==
              G.power(a, static_cast<i64>(params.s)));
        CHECK(G.conjugate(a, b) == G.power(a, static_cast<i64>(params.t)));
        CHECK(G.order(a) == params.m);
        CHECK(G.closure_size(a, b) == G.size());
    }
}

TEST_CASE("element order is exact") {
    for (int trial = 0; trial < 10; ++trial) {
        auto params = testutil::random_params(80);
        Group G(params);
        for (const Elem& x : G.all_elements()) {
            u64 d = G.order(x);
            CHECK(G.power(x, static_cast<i64>(d)) == G.identity());
            for (u64 q : prime_set(d))
                CHECK_FALSE(G.power(x, static_cast<i64>(d / q)) == G.identity());
        }
    }
}

TEST_CASE("power of a product follows the geometric sum identity") {
    // If g^h = g^c then (hg)^k = h^k g^{S(c,k)}.
    int samples = 0;
    while (samples < 1000) {
        auto params = testutil::random_params(120);
        Group G(params);
        for (int inner = 0; inner < 10 && samples < 1000; ++inner, ++samples) {
            u64 j = testutil::pick(0, params.m - 1);
            Elem g{0, j};  // any element of the kernel
            Elem h = G.decode(testutil::pick(0, G.size() - 1));
            u64 c = powmod(params.t % std::max<u64>(params.m, 1), h.i, std::max<u64>(params.m, 1));
            REQUIRE(G.conjugate(g, h) == G.power(g, static_cast<i64>(c)));
            u64 k = testutil::pick(0, 50);
            Elem lhs = G.power(G.mul(h, g), static_cast<i64>(k));
            Elem rhs = G.mul(G.power(h, static_cast<i64>(k)),
                             G.power(g, static_cast<i64>(ese(c, k, std::max<u64>(params.m, 1)))));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("fixture: twentieth power in G_{10,20,5,3}") {
    Group G(make_params(10, 20, 5, 3));
    Elem x{1, 1};  // b a
    Elem expected{0, (5 + ese(3, 20, 10)) % 10};
    CHECK(G.power(x, 20) == expected);
}

TEST_CASE("Hall decomposition of elements") {
    for (int trial = 0; trial < 15; ++trial) {
        auto params = testutil::random_params(100);
        Group G(params);
        for (int k = 0; k < 20; ++k) {
            Elem g = G.decode(testutil::pick(0, G.size() - 1));
            u64 d = G.order(g);
            for (u64 p : prime_set(d)) {
                Elem gp = G.p_part(g, p);
                Elem gq = G.p_complement(g, p);
                CHECK(G.order(gp) == p_part_of(p, d));
                CHECK(G.order(gq) == d / p_part_of(p, d));
                CHECK(G.mul(gp, gq) == g);
                CHECK(G.mul(gq, gp) == g);
            }
        }
    }
}

TEST_CASE("discrete log inside a cyclic subgroup") {
    Group G(make_params(20, 4, 8, 11));
    Elem a = G.gen_a();
    for (u64 k = 0; k < 20; ++k)
        CHECK(G.dlog(a, G.power(a, static_cast<i64>(k))) == k);
    CHECK_FALSE(G.dlog(a, G.gen_b()).has_value());
}

TEST_CASE("factorization data extraction") {
    for (int trial = 0; trial < 25; ++trial) {
        auto params = testutil::random_params(150);
        Group G(params);
        auto fd = factorization_data(G, G.gen_a(), G.gen_b());
        CHECK(fd.m == params.m);
        CHECK(fd.n == params.n);
        CHECK(fd.t == params.t % std::max<u64>(params.m, 1));
        CHECK(fd.y == params.s % params.m);
        // [G:<b>] = gcd(m, s) since |b| = n |a^s|.
        CHECK(fd.s == gcd_u64(params.m, params.s));
    }
    // Non-normal first argument is rejected: in D_4 = G_{4,2,4,3} the
    // subgroup generated by the reflection b is not normal.
    Group D4(make_params(4, 2, 4, 3));
    CHECK_THROWS_AS(factorization_data(D4, D4.gen_b(), D4.gen_a()), std::domain_error);
}

TEST_CASE("closure size caps") {
    Group G(make_params(100, 60, 100, 3));
    CHECK_THROWS_AS(G.closure_size(G.gen_a(), G.gen_b(), 1000), std::length_error);
}
