#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <set>

#include "optcurves/weilenum.hpp"

using namespace optcurves;

namespace {

IntPoly reassemble(const std::vector<std::pair<IntPoly, int>>& factors) {
    IntPoly p{Int(1)};
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) p = p * f;
    return p;
}

}  // namespace

TEST_CASE("factor_over_z fixtures") {
    auto f1 = factor_over_z(parse_poly("(t+1)(t+2)(t^2+2t-2)"));
    REQUIRE(f1.size() == 3);
    CHECK(f1[0].first == parse_poly("t+1"));
    CHECK(f1[1].first == parse_poly("t+2"));
    CHECK(f1[2].first == parse_poly("t^2+2t-2"));

    auto f2 = factor_over_z(parse_poly("t^2+3t+1"));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].second == 1);

    auto f3 = factor_over_z(parse_poly("(t^2+3t+1)^2"));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first == parse_poly("t^2+3t+1"));
    CHECK(f3[0].second == 2);

    auto f4 = factor_over_z(parse_poly("t^3+4t^2+3t-1"));
    REQUIRE(f4.size() == 1);

    // quadratic times quadratic needs the interpolation path
    auto f5 = factor_over_z(parse_poly("(t^2+2t-2)(t^2+2t-1)"));
    REQUIRE(f5.size() == 2);

    auto f6 = factor_over_z(parse_poly("t(t+2)^2(t^2+2t-2)"));
    CHECK(reassemble(f6) == parse_poly("t(t+2)^2(t^2+2t-2)"));
    CHECK_THROWS(factor_over_z(IntPoly{}));
}

TEST_CASE("factor_over_z reassembles random products") {
    std::mt19937 rng(20260824);
    std::uniform_int_distribution<int> cd(-3, 3);
    std::vector<IntPoly> pool = {
        parse_poly("t"),      parse_poly("t+1"),       parse_poly("t+2"),
        parse_poly("t-1"),    parse_poly("t^2+3t+1"),  parse_poly("t^2+2t-2"),
        parse_poly("t^2+2t-1"), parse_poly("t^3+4t^2+3t-1"), parse_poly("t^2+1")};
    std::uniform_int_distribution<int> pick(0, (int)pool.size() - 1);
    std::uniform_int_distribution<int> nf(1, 3);
    for (int it = 0; it < 60; ++it) {
        IntPoly p{Int(1)};
        int n = nf(rng);
        for (int i = 0; i < n; ++i) p = p * pool[pick(rng)];
        if (p.degree() > 7) continue;
        auto factors = factor_over_z(p);
        REQUIRE(reassemble(factors) == p);
        for (const auto& [f, m] : factors)
            if (f.degree() >= 1) REQUIRE(factor_over_z(f).size() == 1);
    }
}

TEST_CASE("res1 filter") {
    CHECK(filter_res1(RealWeilPoly(parse_poly("t^2+3t+1"))).pass);
    CHECK(filter_res1(RealWeilPoly(parse_poly("(t+1)(t+3)"))).pass);
    auto fail = filter_res1(RealWeilPoly(parse_poly("(t+1)(t+2)")));
    CHECK_FALSE(fail.pass);
    CHECK(resultant(fail.h1, fail.h2) * resultant(fail.h1, fail.h2) == 1);
    // every theorem candidate passes
    for (const char* hs :
         {"t+2", "t^2+3t+1", "t^3+4t^2+3t-1", "(t+1)(t+2)(t^2+2t-2)",
          "t(t+2)^2(t^2+2t-2)", "t(t+2)(t^4+5t^3+5t^2-5t-5)",
          "(t-1)(t+2)(t^2+3t+1)^2", "(t+1)(t+2)(t^2+2t-2)(t^2+2t-1)"})
        CHECK(filter_res1(RealWeilPoly(parse_poly(hs))).pass);
}

TEST_CASE("obligations on the theorem candidates") {
    auto has_ellfact = [](const std::vector<Obligation>& obs, const char* base,
                          Int value) {
        for (const auto& ob : obs)
            if (ob.kind == ObligationKind::EllFact &&
                ob.h1 == parse_poly(base) && ob.value == value)
                return true;
        return false;
    };
    auto g4 = obligations_res2_ellfact(
        RealWeilPoly(parse_poly("(t+1)(t+2)(t^2+2t-2)")));
    CHECK(has_ellfact(g4, "t+2", 2));
    auto g6a = obligations_res2_ellfact(
        RealWeilPoly(parse_poly("t(t+2)(t^4+5t^3+5t^2-5t-5)")));
    CHECK(has_ellfact(g6a, "t+2", -2));
    auto g6b = obligations_res2_ellfact(
        RealWeilPoly(parse_poly("(t-1)(t+2)(t^2+3t+1)^2")));
    CHECK(has_ellfact(g6b, "t+2", 3));
    // no obligations for an irreducible polynomial
    CHECK(obligations_res2_ellfact(RealWeilPoly(parse_poly("t^2+3t+1"))).empty());
}

TEST_CASE("double cover feasibility fixtures") {
    auto avec_of = [](const char* hs, int depth) {
        auto L = l_from_h(RealWeilPoly(parse_poly(hs)));
        return avector_from_nvector(nvector_from_l(L, depth)).a;
    };
    std::vector<Int> aE = avec_of("t+2", 12);
    REQUIRE(aE[0] == 5);
    REQUIRE(aE[3] == 5);

    // genus 4 over E: conductor degree 6 split as exponents {2, 4} on two
    // rational points
    auto g4 = double_cover_feasibility(
        RealWeilPoly(parse_poly("(t+1)(t+2)(t^2+2t-2)")), aE, 1);
    REQUIRE(g4.status == FeasibilityVerdict::Status::Feasible);
    REQUIRE(g4.shapes.size() == 1);
    CHECK(g4.shapes[0] == ConductorShape{{1, 2}, {1, 4}});

    // third genus-6 candidate over E: impossible
    auto g6c = double_cover_feasibility(
        RealWeilPoly(parse_poly("(t+1)(t+2)(t^2+2t-2)(t^2+2t-1)")), aE, 1);
    CHECK(g6c.status == FeasibilityVerdict::Status::Contradiction);

    // genus 2 over the projective line: conductor 2Q with deg Q = 3
    std::vector<Int> aP1 = avector_from_nvector(
        nvector_from_l(LPoly(IntPoly{Int(1)}), 12)).a;
    REQUIRE(aP1[0] == 3);
    REQUIRE(aP1[2] == 2);
    auto g2 = double_cover_feasibility(RealWeilPoly(parse_poly("t^2+3t+1")),
                                       aP1, 0);
    REQUIRE(g2.status == FeasibilityVerdict::Status::Feasible);
    REQUIRE(g2.shapes.size() == 1);
    CHECK(g2.shapes[0] == ConductorShape{{3, 2}});
}

TEST_CASE("double cover feasibility agrees with a brute-force matcher") {
    // brute force: genus 2 cover of P^1 at depth 3 only
    auto L = l_from_h(RealWeilPoly(parse_poly("t^2+3t+1")));
    auto cover = avector_from_nvector(nvector_from_l(L, 3)).a;
    std::vector<Int> base = {3, 1, 2};
    // enumerate behaviors: each base place split/inert/ramified
    int feasible_assignments = 0;
    int total_places = 6;  // 3 + 1 + 2
    std::vector<int> degs = {1, 1, 1, 2, 3, 3};
    for (int mask = 0; mask < 729; ++mask) {  // 3^6
        int m = mask;
        std::vector<int> beh(total_places);
        for (auto& b : beh) { b = m % 3; m /= 3; }
        std::vector<Int> a_cover(3, 0);
        Int cond_min = 0;
        for (int i = 0; i < total_places; ++i) {
            int d = degs[i];
            if (beh[i] == 0) {  // split
                a_cover[d - 1] += 2;
            } else if (beh[i] == 1) {  // inert
                if (2 * d <= 3) a_cover[2 * d - 1] += 1;
            } else {  // ramified
                a_cover[d - 1] += 1;
                cond_min += 2 * d;
            }
        }
        // conductor degree 6; remaining slack must be distributable in even
        // steps over ramified places
        if (a_cover != cover) continue;
        if (cond_min > 6) continue;
        Int residual = 6 - cond_min;
        bool ok = false;
        if (residual == 0 && cond_min > 0) ok = true;
        // single ramified place of degree d can absorb residual in steps of 2d
        std::vector<int> ram;
        for (int i = 0; i < total_places; ++i)
            if (beh[i] == 2) ram.push_back(degs[i]);
        if (!ok && !ram.empty()) {
            // small search over extra even exponents
            std::function<bool(std::size_t, Int)> go = [&](std::size_t i, Int rem) {
                if (i == ram.size()) return rem == 0;
                for (Int k = 0; k * 2 * ram[i] <= rem; ++k)
                    if (go(i + 1, rem - k * 2 * ram[i])) return true;
                return false;
            };
            ok = go(0, residual);
        }
        if (ok) ++feasible_assignments;
    }
    // exactly one behavior assignment works: all rational points split, the
    // degree-2 place inert, one degree-3 place ramified and one inert
    CHECK(feasible_assignments == 2);  // the two choices of which Q ramifies
    auto verdict = double_cover_feasibility(RealWeilPoly(parse_poly("t^2+3t+1")),
                                            base, 0);
    CHECK(verdict.status == FeasibilityVerdict::Status::Feasible);
}

TEST_CASE("enumerate_candidates reproduces the theorem") {
    SearchSpec g2{2, 2, 6, 8};
    auto r2 = enumerate_candidates(g2);
    REQUIRE(r2.candidates.size() == 1);
    CHECK(r2.candidates[0].h.h == parse_poly("t^2+3t+1"));
    CHECK(r2.candidates[0].a == std::vector<Int>{6, 0, 1, 1, 6, 13, 12, 33});

    SearchSpec g5{5, 2, 9};
    auto r5 = enumerate_candidates(g5);
    REQUIRE(r5.candidates.size() == 1);
    CHECK(r5.candidates[0].h.h == parse_poly("t(t+2)^2(t^2+2t-2)"));
    std::vector<Int> a5(r5.candidates[0].a.begin(), r5.candidates[0].a.begin() + 6);
    CHECK(a5 == std::vector<Int>{9, 0, 0, 2, 0, 12});

    SearchSpec g6{6, 2, 10};
    auto r6 = enumerate_candidates(g6);
    REQUIRE(r6.candidates.size() == 3);
    std::set<std::string> polys;
    for (const auto& c : r6.candidates) polys.insert(c.h.h.str());
    CHECK(polys.count(parse_poly("t(t+2)(t^4+5t^3+5t^2-5t-5)").str()) == 1);
    CHECK(polys.count(parse_poly("(t-1)(t+2)(t^2+3t+1)^2").str()) == 1);
    CHECK(polys.count(parse_poly("(t+1)(t+2)(t^2+2t-2)(t^2+2t-1)").str()) == 1);
    // the third polynomial carries a double-cover contradiction
    for (const auto& c : r6.candidates) {
        if (c.h.h == parse_poly("(t+1)(t+2)(t^2+2t-2)(t^2+2t-1)")) {
            bool contradicted = false;
            for (const auto& v : c.feasibility)
                if (v.status == FeasibilityVerdict::Status::Contradiction)
                    contradicted = true;
            CHECK(contradicted);
        }
    }

    SearchSpec g1{1, 2, 6};
    auto r1 = enumerate_candidates(g1);
    CHECK(r1.candidates.empty());
    CHECK(r1.infeasible_spec);
}

TEST_CASE("enumeration matches brute force for small genus") {
    // brute force: all monic h of degree g with coefficients bounded by the
    // Vieta bound binom(g,k)*(2*sqrt2)^(g-k)
    for (int g : {1, 2, 3}) {
        for (Int a1 = 3; a1 <= 7; ++a1) {
            SearchSpec spec{g, 2, a1};
            spec.a1_bound_check = false;
            auto fast = enumerate_candidates(spec);
            std::vector<IntPoly> brute;
            std::vector<Int> bounds(g);
            for (int k = 0; k < g; ++k) {
                // coefficient of t^k bounded by binom(g, k) * (2sqrt2)^(g-k)
                Int b = binomial(g, k) * (isqrt(pow_int(Int(8), unsigned(g - k))) + 1);
                bounds[k] = b;
            }
            std::vector<Int> c(g + 1);
            c[g] = 1;
            std::function<void(int)> go = [&](int k) {
                if (k == g) {
                    IntPoly h(c);
                    auto rc = count_roots_in_weil_interval(h);
                    if (!rc.all_in_interval) return;
                    auto av = avector_from_nvector(
                        nvector_from_l(l_from_h(RealWeilPoly(h)), 2 * g));
                    if (!av.valid() || av.a[0] != a1) return;
                    if (!filter_res1(RealWeilPoly(h)).pass) return;
                    brute.push_back(h);
                    return;
                }
                for (Int v = -bounds[k]; v <= bounds[k]; ++v) {
                    c[k] = v;
                    go(k + 1);
                }
                c[k] = 0;
            };
            go(0);
            std::sort(brute.begin(), brute.end(), [](const IntPoly& p, const IntPoly& q) {
                for (int i = std::max(p.degree(), q.degree()); i >= 0; --i)
                    if (p[i] != q[i]) return p[i] < q[i];
                return false;
            });
            REQUIRE(fast.candidates.size() == brute.size());
            for (std::size_t i = 0; i < brute.size(); ++i)
                REQUIRE(fast.candidates[i].h.h == brute[i]);
        }
    }
}

TEST_CASE("emitted candidates satisfy the advertised invariants") {
    for (int g : {2, 3, 4}) {
        SearchSpec spec{g, 2, Int(g + 4)};
        spec.a1_bound_check = false;
        auto res = enumerate_candidates(spec);
        for (const auto& c : res.candidates) {
            REQUIRE(c.h.h.is_monic());
            REQUIRE(c.h.h.degree() == g);
            REQUIRE(count_roots_in_weil_interval(c.h.h).all_in_interval);
            for (const auto& ad : c.a) REQUIRE(ad >= 0);
            REQUIRE(c.res1.pass);
        }
    }
}

TEST_CASE("genus 7 parametric tail search") {
    auto all = parametric_tail_search({10, 0, 0, 4, 2});
    std::set<std::pair<Int, Int>> pairs;
    for (const auto& c : all) pairs.insert({c.alpha, c.beta});
    CHECK(pairs == std::set<std::pair<Int, Int>>{{26, 16}, {27, 18}});

    auto odd = parametric_tail_search({10, 0, 0, 4, 2}, 1);
    REQUIRE(odd.size() == 1);
    CHECK(odd[0].alpha == 26);
    CHECK(odd[0].beta == 16);
    CHECK(odd[0].a[5] == 5);
    CHECK(odd[0].a[6] == 18);

    auto all2 = parametric_tail_search({10, 0, 0, 2, 4});
    std::set<std::pair<Int, Int>> pairs2;
    for (const auto& c : all2) pairs2.insert({c.alpha, c.beta});
    CHECK(pairs2 == std::set<std::pair<Int, Int>>{{3, 2}, {4, 4}, {5, 7}});

    auto odd2 = parametric_tail_search({10, 0, 0, 2, 4}, 1);
    REQUIRE(odd2.size() == 1);
    CHECK(odd2[0].alpha == 4);
    CHECK(odd2[0].beta == 4);
    CHECK(odd2[0].a[5] == 11);
    CHECK(odd2[0].a[6] == 12);
}
