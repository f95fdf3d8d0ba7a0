#ifndef OPTCURVES_RAYCLASS_HPP
#define OPTCURVES_RAYCLASS_HPP

#include <optional>

#include "optcurves/funcs.hpp"
#include "optcurves/int_matrix.hpp"

namespace optcurves {

// ---------------------------------------------------------------------------
// Local unit groups (F_{2^d}[[t]]/t^m)^*
// ---------------------------------------------------------------------------

struct UnitGenerator {
    bool teichmuller = false;
    int i = 0;               ///< exponent of t (odd) for one-unit generators
    std::uint32_t beta = 0;  ///< coefficient of t^i (a power-basis element)
    long long order = 1;
};

/// (F_{2^d}[[t]]/t^m)^* as Teichmueller part times one-units. The one-unit
/// generators 1 + x^k t^i with i odd and k < d are independent, with
/// (1 + b t^i)^(2^e) = 1 + b^(2^e) t^(i 2^e).
struct LocalUnitGroup {
    int d = 1, m = 1;
    FieldRef F;
    std::vector<UnitGenerator> gens;

    long long order() const {
        long long o = 1;
        for (const auto& g : gens) o *= g.order;
        return o;
    }
};

inline LocalUnitGroup unit_group_structure(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("bad local group parameters");
    LocalUnitGroup g;
    g.d = d;
    g.m = m;
    g.F = FieldSpec::get(d);
    if (d > 1)
        g.gens.push_back({true, 0, g.F->generator(), (long long)g.F->group_order()});
    for (int i = 1; i < m; i += 2) {
        long long ord = 1;
        while ((long long)i * ord < m) ord *= 2;
        for (int k = 0; k < d; ++k)
            g.gens.push_back({false, i, std::uint32_t(1) << k, ord});
    }
    return g;
}

/// Exponents of u on the generators of g; u must be a unit known mod t^m.
inline std::vector<Int> discrete_log(const LocalUnitGroup& g, const TruncSeries& u0) {
    if ((int)u0.prec() < g.m)
        throw std::invalid_argument("series precision below the modulus");
    const FieldRef& F = g.F;
    TruncSeries u(F, std::vector<std::uint32_t>(u0.coeffs().begin(),
                                                u0.coeffs().begin() + g.m));
    if (!u.is_unit()) throw std::domain_error("discrete log of a non-unit");
    std::vector<Int> exps(g.gens.size(), 0);
    // Teichmueller part
    std::uint32_t c0 = u[0];
    if (g.d == 1) {
        if (c0 != 1) throw std::domain_error("unexpected constant term");
    } else {
        std::uint32_t e0 = F->dlog(c0);
        exps[0] = Int(e0);
        TruncSeries scale(F, (std::size_t)g.m);
        scale.at(0) = F->inv(c0);
        u = u * scale;
    }
    // strip one-unit coefficients from the lowest term up
    auto index_of = [&](int i, int k) -> std::size_t {
        for (std::size_t idx = 0; idx < g.gens.size(); ++idx)
            if (!g.gens[idx].teichmuller && g.gens[idx].i == i &&
                g.gens[idx].beta == (std::uint32_t(1) << k))
                return idx;
        throw std::logic_error("generator index");
    };
    for (;;) {
        int j = 0;
        for (int i = 1; i < g.m; ++i)
            if (u[i] != 0) { j = i; break; }
        if (j == 0) break;
        int a = 0, j0 = j;
        while (j0 % 2 == 0) { j0 /= 2; ++a; }
        // solve beta^(2^a) = coefficient by repeated square roots
        std::uint32_t beta = u[(std::size_t)j];
        for (int s = 0; s < a; ++s) beta = F->sqrt(beta);
        TruncSeries cancel = TruncSeries::one(F, (std::size_t)g.m);
        for (int k = 0; k < g.d; ++k) {
            if (!((beta >> k) & 1)) continue;
            exps[index_of(j0, k)] += Int(1) << a;
            TruncSeries gen = TruncSeries::one(F, (std::size_t)g.m);
            gen.at((std::size_t)j0) = std::uint32_t(1) << k;
            cancel = cancel * gen.pow(1LL << a);
        }
        u = u * cancel.inv();
    }
    for (std::size_t idx = 0; idx < exps.size(); ++idx) {
        exps[idx] %= g.gens[idx].order;
        if (exps[idx] < 0) exps[idx] += g.gens[idx].order;
    }
    return exps;
}

// ---------------------------------------------------------------------------
// Conductors
// ---------------------------------------------------------------------------

struct ConductorEntry {
    Place place;
    int mult = 1;
    std::optional<CurveFunction> uniformizer;  ///< canonical parameter if unset
};
using Conductor = std::vector<ConductorEntry>;

namespace detail {

inline Place lookup_place(const ArtinSchreierModel& m, const std::string& args) {
    if (args == "inf") {
        for (int d = 1; d <= 2; ++d)
            for (const auto& pl : places_of_degree(m, d))
                if (pl.rep.chart == 1) return pl;
        throw std::invalid_argument("no place at infinity of degree <= 2");
    }
    auto comma = args.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("malformed place: P(" + args + ")");
    std::string xs = args.substr(0, comma), ys = args.substr(comma + 1);
    int d = 1;
    for (char ch : args) {
        if (ch == 'a') d = 4;
        if (ch == 'b') d = 5;
        if (ch == 'c') d = 6;
    }
    auto F = FieldSpec::get(d);
    CurvePoint p{0, F->parse_elem(xs), F->parse_elem(ys)};
    for (const auto& pl : places_of_degree(m, d))
        for (const auto& q : pl.orbit)
            if (q == p) return pl;
    throw std::invalid_argument("no place contains P(" + args + ")");
}

}  // namespace detail

/// Parse conductor text like "4*P(inf) + 2*P(0,1)".
inline Conductor parse_conductor(const ArtinSchreierModel& m, const std::string& text) {
    Conductor cond;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i != text.size() && (text[i] != '+' || depth != 0)) continue;
        std::string term;
        for (char ch : text.substr(start, i - start))
            if (!isspace((unsigned char)ch)) term += ch;
        start = i + 1;
        if (term.empty()) continue;
        int mult = 1;
        auto star = term.find('*');
        if (star != std::string::npos) {
            mult = std::stoi(term.substr(0, star));
            term = term.substr(star + 1);
        }
        if (term.size() < 4 || term[0] != 'P' || term[1] != '(' || term.back() != ')')
            throw std::invalid_argument("malformed conductor term: " + term);
        if (mult < 1) throw std::invalid_argument("conductor multiplicity must be >= 1");
        cond.push_back({detail::lookup_place(m, term.substr(2, term.size() - 3)), mult,
                        std::nullopt});
    }
    if (cond.empty()) throw std::invalid_argument("empty conductor: " + text);
    return cond;
}

// ---------------------------------------------------------------------------
// S-unit images and ray class quotients
// ---------------------------------------------------------------------------

/// The ambient product of local unit groups at the conductor places together
/// with the images of a list of functions.
struct RayClassSetup {
    std::vector<LocalUnitGroup> components;
    std::vector<long long> orders;            ///< concatenated generator orders
    std::vector<std::vector<Int>> images;     ///< one row per function
};

inline RayClassSetup sunit_images(const ArtinSchreierModel& m, const Conductor& cond,
                                  const std::vector<CurveFunction>& units) {
    RayClassSetup s;
    for (const auto& e : cond) {
        auto g = unit_group_structure(e.place.degree, e.mult);
        for (const auto& gen : g.gens) s.orders.push_back(gen.order);
        s.components.push_back(std::move(g));
    }
    for (const auto& u : units) {
        std::vector<Int> row;
        for (std::size_t ci = 0; ci < cond.size(); ++ci) {
            const auto& e = cond[ci];
            LaurentSeries ser =
                e.uniformizer
                    ? local_expand(m, e.place, u, *e.uniformizer, e.mult + 2)
                    : local_expand(m, e.place, u, e.mult + 2);
            if (ser.is_zero() || ser.val() != 0)
                throw std::domain_error("function is not a unit at a conductor place");
            std::vector<std::uint32_t> c(e.mult);
            for (int i = 0; i < e.mult; ++i) c[(std::size_t)i] = ser.coeff(i);
            auto exps = discrete_log(s.components[ci], TruncSeries(e.place.F, c));
            row.insert(row.end(), exps.begin(), exps.end());
        }
        s.images.push_back(std::move(row));
    }
    return s;
}

/// The quotient of Z^n (modulo the generator orders) by the image rows,
/// i.e. the ray class quotient presented by Smith normal form.
struct AbelianQuotient {
    std::vector<Int> invariants;  ///< the nontrivial invariant factors
    Int order = 1;
    IntMatrix v = IntMatrix(0, 0);
    std::vector<Int> diag;

    std::vector<Int> project(const std::vector<Int>& x) const {
        if (x.size() != v.rows()) throw std::invalid_argument("projection length");
        std::vector<Int> w(diag.size(), 0);
        for (std::size_t j = 0; j < diag.size(); ++j) {
            for (std::size_t i = 0; i < x.size(); ++i) w[j] += x[i] * v(i, j);
            if (diag[j] != 0) {
                w[j] %= diag[j];
                if (w[j] < 0) w[j] += diag[j];
            }
        }
        return w;
    }
    bool is_trivial(const std::vector<Int>& x) const {
        for (const Int& c : project(x))
            if (c != 0) return false;
        return true;
    }
};

inline AbelianQuotient ray_class_quotient(const std::vector<long long>& orders,
                                          const std::vector<std::vector<Int>>& images) {
    const std::size_t n = orders.size();
    IntMatrix rel(n + images.size(), n);
    for (std::size_t i = 0; i < n; ++i) rel(i, i) = Int(orders[i]);
    for (std::size_t r = 0; r < images.size(); ++r) {
        if (images[r].size() != n) throw std::invalid_argument("image length");
        for (std::size_t j = 0; j < n; ++j) rel(n + r, j) = images[r][j];
    }
    auto s = snf(rel);
    AbelianQuotient q;
    q.v = s.v;
    q.diag = snf_diagonal(s.d);
    for (const Int& d : q.diag) {
        if (d == 0) throw std::logic_error("ray class quotient not finite");
        q.order *= d;
        if (d > 1) q.invariants.push_back(d);
    }
    return q;
}

inline AbelianQuotient ray_class_quotient(const RayClassSetup& s) {
    return ray_class_quotient(s.orders, s.images);
}

/// Order of an element with the given exponent vector in the ambient group.
inline Int ambient_element_order(const std::vector<long long>& orders,
                                 const std::vector<Int>& x) {
    Int o = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        Int oi = Int(orders[i]) / gcd_int(x[i] % orders[i], Int(orders[i]));
        o = o / gcd_int(o, oi) * oi;
    }
    return o;
}

/// Does the witness class lie in the subgroup generated by the images and
/// the selector? With the selector picking out an index-2 subgroup of the
/// quotient this is the splitting criterion for the corresponding cover.
inline bool artin_split_verdict(const std::vector<long long>& orders,
                                std::vector<std::vector<Int>> images,
                                const std::vector<Int>& selector,
                                const std::vector<Int>& witness) {
    images.push_back(selector);
    return ray_class_quotient(orders, images).is_trivial(witness);
}

// ---------------------------------------------------------------------------
// Witness search
// ---------------------------------------------------------------------------

struct WitnessResult {
    CurveFunction u;
    Divisor div;
};

/// The first function h(x) or y + g(x), ordered by pole order at infinity
/// and then by shape, whose divisor is the target place plus a combination
/// of allowed places and poles at infinity.
inline std::optional<WitnessResult> witness_search(const ArtinSchreierModel& m,
                                                   const Place& target,
                                                   const std::vector<Place>& allowed,
                                                   int max_deg) {
    struct Cand {
        Int pole;
        int shape;  // 0: pure polynomial in x, 1: y + g(x)
        gf2x::Poly2 bits;
        CurveFunction fn;
    };
    std::vector<Place> infs;
    for (int d = 1; d <= 2; ++d)
        for (const auto& pl : places_of_degree(m, d))
            if (pl.rep.chart == 1) infs.push_back(pl);
    auto pole_at_inf = [&](const CurveFunction& fn) {
        Int p = 0;
        for (const auto& pl : infs) {
            Int v = valuation_at(m, pl, fn);
            if (v < 0) p -= Int(pl.degree) * v;
        }
        return p;
    };
    std::vector<Cand> cands;
    for (gf2x::Poly2 h = 2; h < (gf2x::Poly2(1) << (max_deg + 1)); ++h) {
        CurveFunction fn{{FuncFactor{h, 0, 1}}};
        cands.push_back({pole_at_inf(fn), 0, h, fn});
    }
    for (gf2x::Poly2 g = 0; g < (gf2x::Poly2(1) << (max_deg + 1)); ++g) {
        CurveFunction fn{{FuncFactor{g, 1, 1}}};
        cands.push_back({pole_at_inf(fn), 1, g, fn});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return std::tie(a.pole, a.shape, a.bits) < std::tie(b.pole, b.shape, b.bits);
    });
    for (const auto& c : cands) {
        Divisor d = divisor_of(m, c.fn);
        auto it = d.coeffs.find(target);
        if (it == d.coeffs.end() || it->second != 1) continue;
        bool ok = true;
        for (const auto& [pl, mult] : d.coeffs) {
            if (pl == target || pl.rep.chart == 1) continue;
            bool listed = false;
            for (const auto& al : allowed)
                if (al == pl) listed = true;
            if (!listed) { ok = false; break; }
        }
        if (ok) return WitnessResult{c.fn, std::move(d)};
    }
    return std::nullopt;
}

}  // namespace optcurves

#endif
