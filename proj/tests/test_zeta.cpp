#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "optcurves/sturm.hpp"
#include "optcurves/zeta.hpp"

using namespace optcurves;

TEST_CASE("l_from_h fixtures") {
    CHECK(l_from_h(RealWeilPoly(parse_poly("t+2"))).L == parse_poly("2t^2+2t+1"));
    CHECK(l_from_h(RealWeilPoly(parse_poly("t"))).L == parse_poly("2t^2+1"));
    CHECK(l_from_h(RealWeilPoly(parse_poly("t^2+3t+1"))).L ==
          parse_poly("4t^4+6t^3+5t^2+3t+1"));
    CHECK_THROWS(RealWeilPoly(parse_poly("2t+1")));
}

TEST_CASE("h_from_l round-trips the fixtures") {
    for (const char* hs : {"t+2", "t", "t^2+3t+1"}) {
        RealWeilPoly h(parse_poly(hs));
        CHECK(h_from_l(l_from_h(h)).h == h.h);
    }
    // asymmetric L rejected by the LPoly invariant itself
    CHECK_THROWS(LPoly(parse_poly("4t^4+6t^3+5t^2+4t+1")));
    CHECK_THROWS(LPoly(parse_poly("2t^2+2t+2")));
}

TEST_CASE("h to L round-trip on random monic polynomials") {
    std::mt19937 rng(20260824);
    std::uniform_int_distribution<int> cd(-9, 9);
    std::uniform_int_distribution<int> gd(1, 7);
    for (int it = 0; it < 10000; ++it) {
        int g = gd(rng);
        std::vector<Int> c(g + 1);
        for (int i = 0; i < g; ++i) c[i] = cd(rng);
        c[g] = 1;
        RealWeilPoly h{IntPoly(c)};
        LPoly L = l_from_h(h);
        REQUIRE(L.L[0] == 1);
        REQUIRE(L.L.lc() == pow_int(Int(2), unsigned(g)));
        REQUIRE(h_from_l(L).h == h.h);
    }
}

TEST_CASE("nvector_from_l fixtures") {
    LPoly le(parse_poly("2t^2+2t+1"));
    CHECK(nvector_from_l(le, 6) == std::vector<Int>{5, 5, 5, 25, 25, 65});
    LPoly lp1(IntPoly{Int(1)});
    auto np = nvector_from_l(lp1, 6);
    for (int n = 1; n <= 6; ++n) REQUIRE(np[n - 1] == pow_int(Int(2), n) + 1);
    auto lg2 = l_from_h(RealWeilPoly(parse_poly("t^2+2t-2")));
    auto n2 = nvector_from_l(lg2, 2);
    CHECK(n2[0] == 5);
    CHECK(n2[1] == 5);
}

TEST_CASE("avector fixtures and round-trip") {
    auto av = avector_from_nvector({5, 5, 5, 25, 25, 65});
    CHECK(av.valid());
    CHECK(av.a == std::vector<Int>{5, 0, 0, 5, 4, 10});
    auto ap = avector_from_nvector({3, 5, 9, 17, 33, 65});
    CHECK(ap.a == std::vector<Int>{3, 1, 2, 3, 6, 9});
    auto lh6 = l_from_h(RealWeilPoly(parse_poly("(t-1)(t+2)(t^2+3t+1)^2")));
    auto a6 = avector_from_nvector(nvector_from_l(lh6, 6));
    CHECK(a6.valid());
    CHECK(a6.a == std::vector<Int>{10, 0, 0, 0, 2, 15});

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ad(0, 30);
    std::uniform_int_distribution<int> len(1, 12);
    for (int it = 0; it < 500; ++it) {
        std::vector<Int> a(len(rng));
        for (auto& x : a) x = ad(rng);
        auto rt = avector_from_nvector(nvector_from_avector(a));
        REQUIRE(rt.valid());
        REQUIRE(rt.a == a);
    }
}

TEST_CASE("avector flags") {
    // N_2 < N_1 forces a negative a_2
    auto bad = avector_from_nvector({5, 3});
    CHECK_FALSE(bad.all_nonnegative);
    CHECK(bad.all_integral);
    // parity violation: a_2 = (N_2 - N_1)/2 non-integral
    auto odd = avector_from_nvector({5, 6});
    CHECK_FALSE(odd.all_integral);
}

TEST_CASE("class numbers") {
    CHECK(class_number(RealWeilPoly(parse_poly("(t+2)(t-1)"))) == 10);
    CHECK(class_number(RealWeilPoly(parse_poly("t(t+2)(t^2-5)^2"))) == 240);
    CHECK(class_number(RealWeilPoly(parse_poly("t+2"))) == 5);
    CHECK_THROWS(class_number(RealWeilPoly(parse_poly("t-3"))));
    // agrees with L(1)
    for (const char* hs : {"t+2", "t^2+3t+1", "(t+2)(t-1)"}) {
        RealWeilPoly h(parse_poly(hs));
        CHECK(class_number(h) == l_from_h(h).L.eval(Int(1)));
    }
}

TEST_CASE("weil bound holds when all roots lie in the interval") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> rd(-2, 2);
    for (int it = 0; it < 200; ++it) {
        int g = 1 + it % 4;
        IntPoly h{Int(1)};
        for (int i = 0; i < g; ++i) h = h * IntPoly{Int(-rd(rng)), Int(1)};
        auto rc = count_roots_in_weil_interval(h);
        REQUIRE(rc.all_in_interval);
        auto N = nvector_from_l(l_from_h(RealWeilPoly(h)), 6);
        for (int n = 1; n <= 6; ++n) {
            Int dev = N[n - 1] - pow_int(Int(2), n) - 1;
            Int bound2 = Int(4) * g * g * pow_int(Int(2), n);  // (2g*2^(n/2))^2
            REQUIRE(dev * dev <= bound2);
        }
    }
}
