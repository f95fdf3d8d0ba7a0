#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "optcurves/int_matrix.hpp"
#include "optcurves/int_poly.hpp"
#include "optcurves/sturm.hpp"

using namespace optcurves;

namespace {

std::mt19937 rng(20260824);

IntPoly random_poly(int max_deg, int coeff_bound, bool nonzero = true) {
    std::uniform_int_distribution<int> degd(0, max_deg);
    std::uniform_int_distribution<int> cd(-coeff_bound, coeff_bound);
    for (;;) {
        int d = degd(rng);
        std::vector<Int> c(d + 1);
        for (auto& x : c) x = cd(rng);
        IntPoly p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

/// Brute-force minimal positive constant value of u*f + v*g over integer u, v
/// with deg u < deg g, deg v < deg f and coefficients in [-bound, bound].
Int brute_force_reduced_resultant(const IntPoly& f, const IntPoly& g, int bound) {
    int nu = g.degree(), nv = f.degree();
    int vars = nu + nv;
    std::vector<int> e(vars, -bound);
    Int best = 0;
    for (;;) {
        std::vector<Int> uc(e.begin(), e.begin() + nu);
        std::vector<Int> vc(e.begin() + nu, e.end());
        IntPoly comb = IntPoly(uc) * f + IntPoly(vc) * g;
        if (comb.degree() == 0 && comb.lc() > 0 &&
            (best == 0 || comb.lc() < best))
            best = comb.lc();
        int i = 0;
        while (i < vars && e[i] == bound) e[i++] = -bound;
        if (i == vars) break;
        ++e[i];
    }
    return best;
}

}  // namespace

TEST_CASE("resultant fixtures") {
    IntPoly f = parse_poly("t+2");
    CHECK(resultant(f, parse_poly("(t+1)(t^2+2t-2)")) == 2);
    CHECK(resultant(f, parse_poly("(t-1)(t^2+3t+1)")) == 3);
    CHECK(resultant(f, parse_poly("t(t^4+5t^3+5t^2-5t-5)")) == -2);
    // argument order matters for the sign
    CHECK(resultant(parse_poly("t"), f) == 2);
    CHECK(resultant(f, parse_poly("t")) == -2);
    CHECK_THROWS(resultant(IntPoly{}, f));
}

TEST_CASE("resultant agrees with root-product convention") {
    // Res(f, g) = lc(f)^deg g * prod g(alpha_i): check against products of
    // linear factors with known roots.
    std::uniform_int_distribution<int> rd(-4, 4);
    for (int it = 0; it < 100; ++it) {
        int m = 1 + it % 3, n = 1 + (it / 3) % 3;
        IntPoly f{Int(1)}, g{Int(1)};
        std::vector<Int> fr, gr;
        for (int i = 0; i < m; ++i) {
            Int r = rd(rng);
            fr.push_back(r);
            f = f * IntPoly{-r, 1};
        }
        for (int i = 0; i < n; ++i) {
            Int r = rd(rng);
            gr.push_back(r);
            g = g * IntPoly{-r, 1};
        }
        Int expect = 1;
        for (const auto& a : fr) expect *= g.eval(a);
        CHECK(resultant(f, g) == expect);
    }
}

TEST_CASE("reduced resultant fixtures") {
    CHECK(reduced_resultant(parse_poly("t(t+2)"), parse_poly("t^2+2t-2")) == 2);
    CHECK(reduced_resultant(parse_poly("t"), parse_poly("t+1")) == 1);
    CHECK(reduced_resultant(parse_poly("t+2"), parse_poly("(t+1)(t^2+2t-2)")) == 2);
    CHECK_THROWS(reduced_resultant(parse_poly("t+1"), parse_poly("(t+1)(t+2)")));
}

TEST_CASE("reduced resultant divides resultant; brute force finds no smaller") {
    int done = 0;
    while (done < 40) {
        IntPoly f = random_poly(3, 4);
        IntPoly g = random_poly(3, 4);
        if (f.degree() < 1 || g.degree() < 1) continue;
        if (resultant(f, g) == 0) continue;
        Int rr = reduced_resultant(f, g);
        Int r = abs_of(resultant(f, g));
        REQUIRE(rr > 0);
        CHECK(r % rr == 0);
        Int bf = brute_force_reduced_resultant(f, g, 3);
        if (bf != 0) CHECK(bf >= rr);
        ++done;
    }
    // cases small enough for the brute force to be exhaustive at the scale
    // of the lattice coefficients
    IntPoly f = parse_poly("t(t+2)"), g = parse_poly("t^2+2t-2");
    CHECK(brute_force_reduced_resultant(f, g, 2) == reduced_resultant(f, g));
}

TEST_CASE("radical") {
    IntPoly q = parse_poly("t^2+3t+1");
    CHECK(radical(q * q) == q);
    CHECK(radical(q) == q);
    IntPoly prod = parse_poly("(t-1)(t+2)") * q * q;
    CHECK(radical(prod) == parse_poly("(t-1)(t+2)(t^2+3t+1)"));
    // sign of the leading coefficient is preserved
    CHECK(radical(-(q * q)) == -q);
}

TEST_CASE("radical properties on random inputs") {
    for (int it = 0; it < 60; ++it) {
        IntPoly f = random_poly(5, 5);
        if (f.degree() < 1) continue;
        IntPoly r = radical(f);
        CHECK(gcd_poly(r, r.derivative()).degree() == 0);
        // r has the same roots: r | f * const and f | r^deg f * const
        Int scale = pow_int(r.lc(), unsigned(f.degree() + 1));
        CHECK((f * scale).divide_exact(r).has_value());
        IntPoly rp{Int(1)};
        for (int i = 0; i < f.degree(); ++i) rp = rp * r;
        Int scale2 = pow_int(f.lc(), unsigned(rp.degree() + 1));
        CHECK((rp * scale2).divide_exact(f).has_value());
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(parse_poly("t^3+4t^2+3t-1")) == 49);
    CHECK(discriminant(parse_poly("t^2-1")) == 4);
    CHECK(discriminant(parse_poly("t^2+3t+1")) == 5);
    CHECK_THROWS(discriminant(IntPoly{Int(3)}));
}

TEST_CASE("weil interval root counting") {
    auto r1 = count_roots_in_weil_interval(parse_poly("t+2"));
    CHECK(r1.count == 1);
    CHECK(r1.all_in_interval);
    auto r2 = count_roots_in_weil_interval(parse_poly("t^2+3t+1"));
    CHECK(r2.count == 2);
    CHECK(r2.all_in_interval);
    auto r3 = count_roots_in_weil_interval(parse_poly("t-3"));
    CHECK(r3.count == 0);
    CHECK_FALSE(r3.all_in_interval);
    // endpoint roots
    auto r4 = count_roots_in_weil_interval(parse_poly("t^2-8"));
    CHECK(r4.count == 2);
    CHECK(r4.all_in_interval);
    // complex roots
    auto r5 = count_roots_in_weil_interval(parse_poly("t^2+1"));
    CHECK(r5.count == 0);
    CHECK_FALSE(r5.all_in_interval);
    CHECK_THROWS(count_roots_in_weil_interval(parse_poly("t+1"), 3));
}

TEST_CASE("real root count matches constructed root sets") {
    std::uniform_int_distribution<int> rd(-3, 3);
    for (int it = 0; it < 80; ++it) {
        IntPoly p{Int(1)};
        std::set<Int> roots;
        int nlin = 1 + it % 3, nquad = (it / 3) % 2;
        for (int i = 0; i < nlin; ++i) {
            Int r = rd(rng);
            roots.insert(r);
            p = p * IntPoly{-r, 1};
        }
        for (int i = 0; i < nquad; ++i)
            p = p * IntPoly{Int(1 + (it % 5)), Int(rd(rng)), Int(1 + it % 2)} *
                IntPoly{Int(1)};  // may have real or complex roots
        // only assert on the purely linear part when quadratic factors exist
        if (nquad == 0)
            CHECK(count_distinct_real_roots(p) == (int)roots.size());
        else
            CHECK(count_distinct_real_roots(p) >= (int)roots.size());
    }
}

TEST_CASE("quad value signs") {
    CHECK(QuadValue{0, 0}.sign() == 0);
    CHECK(QuadValue{1, 0}.sign() == 1);
    CHECK(QuadValue{0, -1}.sign() == -1);
    CHECK(QuadValue{3, -2}.sign() == 1);    // 3 > 2*sqrt2 ~ 2.83
    CHECK(QuadValue{-3, 2}.sign() == -1);
    CHECK(QuadValue{2, -2}.sign() == -1);   // 2 < 2*sqrt2
    CHECK(QuadValue{-2, 2}.sign() == 1);
    // h(2*sqrt2) for h = t^2 - 8 vanishes
    CHECK(eval_at_2sqrt2(parse_poly("t^2-8"), 1).sign() == 0);
    CHECK(eval_at_2sqrt2(parse_poly("t^2-8"), -1).sign() == 0);
    CHECK(eval_at_2sqrt2(parse_poly("t+2"), -1).sign() == -1);
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK_THROWS(moebius(0));
    for (unsigned n = 2; n <= 1000; ++n) {
        int s = 0;
        for (unsigned d : divisors_of(n)) s += moebius(d);
        REQUIRE(s == 0);
    }
}

TEST_CASE("hnf basics") {
    IntMatrix m(2, 2);
    m(0, 0) = 1; m(1, 1) = 1;
    CHECK(hnf(m) == m);
    IntMatrix s(2, 2);
    s(0, 0) = 2; s(0, 1) = 1; s(1, 0) = 0; s(1, 1) = 3;
    IntMatrix h = hnf(s);
    CHECK(h(0, 0) == 2);
    CHECK(h(1, 1) == 3);
    CHECK(h(1, 0) == 0);
}

TEST_CASE("snf fixtures") {
    IntMatrix m(2, 2);
    m(0, 0) = 2; m(1, 1) = 4;
    auto r = snf(m);
    CHECK(r.d(0, 0) == 2);
    CHECK(r.d(1, 1) == 4);

    IntMatrix m2(2, 2);
    m2(0, 0) = 1; m2(0, 1) = 1; m2(1, 0) = 1; m2(1, 1) = 3;
    auto r2 = snf(m2);
    CHECK(r2.d(0, 0) == 1);
    CHECK(r2.d(1, 1) == 2);
    CHECK(r2.u * m2 * r2.v == r2.d);
}

TEST_CASE("snf reconstruction on random matrices") {
    std::uniform_int_distribution<int> cd(-6, 6);
    std::uniform_int_distribution<int> dd(1, 4);
    for (int it = 0; it < 60; ++it) {
        std::size_t rows = dd(rng), cols = dd(rng);
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = cd(rng);
        auto r = snf(m);
        REQUIRE(r.u * m * r.v == r.d);
        Int du = det(r.u), dv = det(r.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        auto diag = snf_diagonal(r.d);
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            REQUIRE(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            else CHECK(diag[i + 1] == 0);
        }
        // off-diagonal of d is zero
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) REQUIRE(r.d(i, j) == 0);
    }
}

TEST_CASE("polynomial parse and print round-trip") {
    auto p = parse_poly("t^3+4t^2+3t-1");
    CHECK(p.str() == "t^3 + 4*t^2 + 3*t - 1");
    CHECK(parse_poly(p.str()) == p);
    CHECK(parse_poly("t(t+2)^2(t^2+2t-2)").degree() == 5);
    CHECK(parse_poly("-t+1") == IntPoly{Int(1), Int(-1)});
}
