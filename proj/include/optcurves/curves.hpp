#ifndef OPTCURVES_CURVES_HPP
#define OPTCURVES_CURVES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "optcurves/gf.hpp"
#include "optcurves/zeta.hpp"

namespace optcurves {

/// Hyperelliptic/Artin-Schreier normal form y^2 + a(x) y = f(x) over F_2,
/// glued with the chart x = 1/X, y = Y/X^k at infinity:
///   Y^2 + X^k a(1/X) Y = X^{2k} f(1/X).
struct ArtinSchreierModel {
    gf2x::Poly2 a = 1;
    gf2x::Poly2 f = 0;
    int genus = 1;
    int k = 2;

    gf2x::Poly2 chart2_a() const {
        gf2x::Poly2 r = 0;
        for (int i = 0; i <= gf2x::deg2(a); ++i)
            if ((a >> i) & 1) r |= gf2x::Poly2(1) << (k - i);
        return r;
    }
    gf2x::Poly2 chart2_f() const {
        gf2x::Poly2 r = 0;
        for (int i = 0; i <= gf2x::deg2(f); ++i)
            if ((f >> i) & 1) r |= gf2x::Poly2(1) << (2 * k - i);
        return r;
    }
    /// defining polynomials of the requested chart
    std::pair<gf2x::Poly2, gf2x::Poly2> chart(int c) const {
        if (c == 0) return {a, f};
        return {chart2_a(), chart2_f()};
    }

    void validate() const {
        if (genus < 0 || k < 1) throw std::invalid_argument("bad model parameters");
        if (gf2x::deg2(a) > k || gf2x::deg2(f) > 2 * k)
            throw std::invalid_argument("chart exponent k too small for the model");
    }

    std::string str() const {
        return "curve: y^2 + " + gf2x::poly2_str(a) + "*y = " + gf2x::poly2_str(f) +
               "; genus: " + std::to_string(genus) + "; k: " + std::to_string(k);
    }
};

/// Parse the model text format `curve: y^2 + <a>*y = <f>; genus: g; k: <int>`.
inline ArtinSchreierModel parse_model(const std::string& text) {
    auto fail = [&]() -> ArtinSchreierModel {
        throw std::invalid_argument("malformed model: " + text);
    };
    auto pos = text.find("curve:");
    if (pos == std::string::npos) return fail();
    auto ypos = text.find("y^2", pos);
    auto plus = text.find('+', ypos);
    auto star = text.find("*y", plus);
    auto eq = text.find('=', star);
    auto semi = text.find(';', eq);
    auto gpos = text.find("genus:", semi);
    auto semi2 = text.find(';', gpos);
    auto kpos = text.find("k:", semi2);
    if (ypos == std::string::npos || plus == std::string::npos ||
        star == std::string::npos || eq == std::string::npos ||
        semi == std::string::npos || gpos == std::string::npos ||
        semi2 == std::string::npos || kpos == std::string::npos)
        return fail();
    ArtinSchreierModel m;
    m.a = gf2x::parse_poly2(text.substr(plus + 1, star - plus - 1));
    m.f = gf2x::parse_poly2(text.substr(eq + 1, semi - eq - 1));
    m.genus = std::stoi(text.substr(gpos + 6, semi2 - gpos - 6));
    m.k = std::stoi(text.substr(kpos + 2));
    m.validate();
    return m;
}

inline std::uint32_t eval_poly2(const FieldRef& F, gf2x::Poly2 p, std::uint32_t x) {
    std::uint32_t r = 0, xp = 1;
    for (int i = 0; i <= gf2x::deg2(p); ++i) {
        if ((p >> i) & 1) r = F->add(r, xp);
        xp = F->mul(xp, x);
    }
    return r;
}

/// A geometric point in one of the two charts.
struct CurvePoint {
    int chart = 0;  // 0: affine (x, y); 1: infinity chart (X, Y)
    std::uint32_t x = 0, y = 0;

    bool operator<(const CurvePoint& o) const {
        return std::tie(chart, x, y) < std::tie(o.chart, o.x, o.y);
    }
    bool operator==(const CurvePoint& o) const {
        return chart == o.chart && x == o.x && y == o.y;
    }
};

/// All points over F_{2^n}: affine chart solutions plus the X = 0 locus of
/// the infinity chart (X != 0 there repeats the affine chart).
inline std::vector<CurvePoint> points_over(const ArtinSchreierModel& m, int n) {
    if (n < 1 || n > 16) throw std::domain_error("field degree out of range");
    m.validate();
    auto F = FieldSpec::get(n);
    std::vector<CurvePoint> pts;
    auto solve_chart = [&](int c, bool only_x0) {
        auto [A, Fx] = m.chart(c);
        for (std::uint32_t x = 0; x < F->order(); ++x) {
            if (only_x0 && x != 0) continue;
            std::uint32_t av = eval_poly2(F, A, x);
            std::uint32_t fv = eval_poly2(F, Fx, x);
            if (av == 0) {
                pts.push_back({c, x, F->sqrt(fv)});
            } else {
                // y = av z turns the equation into z^2 + z = fv / av^2
                std::uint32_t c0 = F->mul(fv, F->inv(F->mul(av, av)));
                auto z = F->solve_artin_schreier(c0);
                if (z < 0) continue;
                pts.push_back({c, x, F->mul(av, (std::uint32_t)z)});
                pts.push_back({c, x, F->add(F->mul(av, (std::uint32_t)z), av)});
            }
        }
    };
    solve_chart(0, false);
    solve_chart(1, true);
    std::sort(pts.begin(), pts.end());
    return pts;
}

inline Int count_points(const ArtinSchreierModel& m, int n) {
    return Int(points_over(m, n).size());
}

/// A closed point: a Frobenius orbit of geometric points in a fixed chart.
struct Place {
    int degree = 1;
    FieldRef F;  // F_{2^degree}
    CurvePoint rep;  // lexicographically smallest orbit element
    std::vector<CurvePoint> orbit;

    bool operator<(const Place& o) const {
        return std::tie(degree, rep) < std::tie(o.degree, o.rep);
    }
    bool operator==(const Place& o) const {
        return degree == o.degree && rep == o.rep;
    }
};

/// The places of exact degree d (Frobenius orbits of size d over F_{2^d}).
inline std::vector<Place> places_of_degree(const ArtinSchreierModel& m, int d) {
    if (d < 1 || d > 12) throw std::domain_error("place degree out of range");
    auto F = FieldSpec::get(d);
    auto pts = points_over(m, d);
    std::set<CurvePoint> seen;
    std::vector<Place> out;
    for (const auto& p : pts) {
        if (seen.count(p)) continue;
        std::vector<CurvePoint> orbit{p};
        CurvePoint q{p.chart, F->frobenius(p.x), F->frobenius(p.y)};
        while (!(q == p)) {
            orbit.push_back(q);
            q = {q.chart, F->frobenius(q.x), F->frobenius(q.y)};
        }
        for (const auto& e : orbit) seen.insert(e);
        if ((int)orbit.size() != d) continue;
        Place pl;
        pl.degree = d;
        pl.F = F;
        pl.rep = *std::min_element(orbit.begin(), orbit.end());
        pl.orbit = std::move(orbit);
        out.push_back(std::move(pl));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Int> avector_by_counting(const ArtinSchreierModel& m, int dmax) {
    std::vector<Int> a(dmax);
    for (int d = 1; d <= dmax; ++d) a[d - 1] = Int(places_of_degree(m, d).size());
    return a;
}

/// L-polynomial fitted from N_1..N_g and checked against N_{g+1}..N_{2g}.
inline LPoly fit_l_from_counts(const ArtinSchreierModel& m) {
    int g = m.genus;
    if (g == 0) return LPoly(IntPoly{Int(1)});
    std::vector<Int> N(2 * g);
    for (int n = 1; n <= 2 * g && n <= 16; ++n) N[n - 1] = count_points(m, n);
    std::vector<Int> p(g);
    for (int n = 1; n <= g; ++n) p[n - 1] = pow_int(Int(2), unsigned(n)) + 1 - N[n - 1];
    // Newton: elementary symmetric functions of the Frobenius eigenvalues
    std::vector<Int> e(g + 1, 0);
    e[0] = 1;
    for (int kk = 1; kk <= g; ++kk) {
        Int s = 0;
        for (int i = 1; i <= kk; ++i) {
            Int term = e[kk - i] * p[i - 1];
            s += (i % 2 ? term : -term);
        }
        if (s % kk != 0)
            throw std::domain_error("point counts incompatible with the declared genus");
        e[kk] = s / kk;
    }
    std::vector<Int> c(2 * g + 1);
    c[0] = 1;
    for (int kk = 1; kk <= g; ++kk) c[kk] = (kk % 2 ? -e[kk] : e[kk]);
    for (int kk = 0; kk < g; ++kk) c[2 * g - kk] = pow_int(Int(2), unsigned(g - kk)) * c[kk];
    LPoly L(IntPoly(std::move(c)));
    auto check = nvector_from_l(L, std::min(2 * g, 16));
    for (int n = g + 1; n <= 2 * g && n <= 16; ++n)
        if (check[n - 1] != N[n - 1])
            throw std::domain_error("point counts incompatible with the declared genus");
    return L;
}

/// Per-parameter a-vectors for a finite family of models.
inline std::vector<std::pair<std::string, std::vector<Int>>> survey_family(
    const std::vector<std::pair<std::string, ArtinSchreierModel>>& family, int dmax) {
    std::vector<std::pair<std::string, std::vector<Int>>> out;
    for (const auto& [label, model] : family)
        out.push_back({label, avector_by_counting(model, dmax)});
    return out;
}

// ---------------------------------------------------------------------------
// The elliptic curve E: y^2 + y = x^3 + x and its automorphisms
// ---------------------------------------------------------------------------

struct EllipticPoint {
    bool infinity = true;
    std::uint32_t x = 0, y = 0;
    FieldRef F;

    static EllipticPoint at_infinity(FieldRef F) {
        EllipticPoint p;
        p.F = std::move(F);
        return p;
    }
    static EllipticPoint affine(FieldRef F, std::uint32_t x, std::uint32_t y) {
        EllipticPoint p;
        p.infinity = false;
        p.x = x;
        p.y = y;
        // y^2 + y = x^3 + x
        std::uint32_t lhs = F->add(F->mul(y, y), y);
        std::uint32_t rhs = F->add(F->mul(F->mul(x, x), x), x);
        if (lhs != rhs) throw std::invalid_argument("point not on y^2+y=x^3+x");
        p.F = std::move(F);
        return p;
    }
    bool operator==(const EllipticPoint& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
};

inline EllipticPoint ell_neg(const EllipticPoint& p) {
    if (p.infinity) return p;
    return EllipticPoint::affine(p.F, p.x, p.F->add(p.y, 1));
}

inline EllipticPoint ell_add(const EllipticPoint& p, const EllipticPoint& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    const FieldRef& F = p.F;
    if (p.x == q.x) {
        if (p.y != q.y) return EllipticPoint::at_infinity(F);  // P + (-P)
        // doubling: lambda = x^2 + 1
        std::uint32_t l = F->add(F->mul(p.x, p.x), 1);
        std::uint32_t x3 = F->mul(l, l);
        std::uint32_t y3 = F->add(F->add(F->mul(l, F->add(p.x, x3)), p.y), 1);
        return EllipticPoint::affine(F, x3, y3);
    }
    std::uint32_t l = F->mul(F->add(p.y, q.y), F->inv(F->add(p.x, q.x)));
    std::uint32_t x3 = F->add(F->add(F->mul(l, l), p.x), q.x);
    std::uint32_t y3 = F->add(F->add(F->mul(l, F->add(p.x, x3)), p.y), 1);
    return EllipticPoint::affine(F, x3, y3);
}

/// sigma: translation by P_1 = (0, 0).
inline EllipticPoint sigma_point(const EllipticPoint& p) {
    return ell_add(p, EllipticPoint::affine(p.F, 0, 0));
}

/// tau: (x, y) -> (x+1, y+x+1); fixes the point at infinity.
inline EllipticPoint tau_point(const EllipticPoint& p) {
    if (p.infinity) return p;
    return EllipticPoint::affine(p.F, p.F->add(p.x, 1),
                                 p.F->add(p.F->add(p.y, p.x), 1));
}

namespace detail {

inline Place place_of_point(const FieldRef& F, const CurvePoint& pt) {
    std::vector<CurvePoint> orbit{pt};
    CurvePoint q{pt.chart, F->frobenius(pt.x), F->frobenius(pt.y)};
    while (!(q == pt)) {
        orbit.push_back(q);
        q = {q.chart, F->frobenius(q.x), F->frobenius(q.y)};
    }
    Place pl;
    pl.degree = (int)orbit.size();
    pl.F = F;
    pl.rep = *std::min_element(orbit.begin(), orbit.end());
    pl.orbit = std::move(orbit);
    return pl;
}

}  // namespace detail

/// Apply a point map to a place of E (the map must be defined over F_2 so it
/// permutes places of each degree).
template <typename PointMap>
inline Place map_place_on_e(const Place& pl, PointMap&& pm) {
    EllipticPoint p = pl.rep.chart == 1
                          ? EllipticPoint::at_infinity(pl.F)
                          : EllipticPoint::affine(pl.F, pl.rep.x, pl.rep.y);
    EllipticPoint q = pm(p);
    CurvePoint cp = q.infinity ? CurvePoint{1, 0, 0} : CurvePoint{0, q.x, q.y};
    return detail::place_of_point(pl.F, cp);
}

inline Place sigma_place(const Place& pl) {
    return map_place_on_e(pl, [](const EllipticPoint& p) { return sigma_point(p); });
}

inline Place tau_place(const Place& pl) {
    return map_place_on_e(pl, [](const EllipticPoint& p) { return tau_point(p); });
}

}  // namespace optcurves

#endif
