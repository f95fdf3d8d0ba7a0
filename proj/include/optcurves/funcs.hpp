#ifndef OPTCURVES_FUNCS_HPP
#define OPTCURVES_FUNCS_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "optcurves/curves.hpp"
#include "optcurves/series.hpp"

namespace optcurves {

/// One factor (A(x) + B(x) y)^exp of a function on the curve.
struct FuncFactor {
    gf2x::Poly2 A = 0, B = 0;
    int exp = 1;
};

/// A nonzero function written as a product of y-linear factors.
struct CurveFunction {
    std::vector<FuncFactor> factors;

    std::string str() const {
        std::ostringstream num, den;
        auto emit = [](std::ostringstream& os, const FuncFactor& f, int e) {
            std::string body;
            if (f.B == 0) body = gf2x::poly2_str(f.A);
            else if (f.A == 0 && f.B == 1) body = "y";
            else if (f.B == 1) body = "y+" + gf2x::poly2_str(f.A);
            else body = "(" + gf2x::poly2_str(f.B) + ")*y+" + gf2x::poly2_str(f.A);
            bool wrap = body.find('+') != std::string::npos || e > 1;
            os << (wrap ? "(" + body + ")" : body);
            if (e > 1) os << "^" << e;
        };
        for (const auto& f : factors)
            emit(f.exp > 0 ? num : den, f, f.exp > 0 ? f.exp : -f.exp);
        std::string n = num.str(), d = den.str();
        if (n.empty()) n = "1";
        return d.empty() ? n : n + "/" + (d.find(')') != d.rfind(')') ? "(" + d + ")" : d);
    }
};

namespace detail {

// one y-linear polynomial like "y+x^3+1" or "x^2+x+1"
inline FuncFactor parse_y_linear(const std::string& s) {
    FuncFactor f;
    std::string term;
    auto flush = [&]() {
        std::string t;
        for (char ch : term)
            if (!isspace((unsigned char)ch)) t += ch;
        term.clear();
        if (t.empty()) return;
        auto ypos = t.find('y');
        if (ypos != std::string::npos) {
            t.erase(ypos, 1);
            if (!t.empty() && t[0] == '*') t.erase(0, 1);
            if (!t.empty() && t.back() == '*') t.pop_back();
            f.B ^= t.empty() ? 1 : gf2x::parse_poly2(t);
        } else {
            f.A ^= gf2x::parse_poly2(t);
        }
    };
    for (char ch : s) {
        if (ch == '+') flush();
        else term += ch;
    }
    flush();
    if (f.A == 0 && f.B == 0) throw std::invalid_argument("zero factor: " + s);
    return f;
}

}  // namespace detail

namespace detail {

// a '/'-free product of juxtaposed factors, e.g. "y(y+x)(x^2+x+1)^3"
inline void parse_product(const std::string& side, int sign,
                          std::vector<FuncFactor>& out) {
    auto add_group = [&](const std::string& body, int exp) {
        if (body.find('(') != std::string::npos) {
            if (exp != 1)
                throw std::invalid_argument("cannot raise a product to a power");
            parse_product(body, sign, out);
            return;
        }
        auto f = parse_y_linear(body);
        f.exp = sign * exp;
        out.push_back(f);
    };
    if (side.find('(') == std::string::npos) {
        add_group(side, 1);  // a single possibly-sum factor
        return;
    }
    std::size_t i = 0;
    std::string bare;
    auto flush_bare = [&]() {
        std::string t;
        for (char ch : bare)
            if (!isspace((unsigned char)ch)) t += ch;
        bare.clear();
        if (!t.empty()) add_group(t, 1);
    };
    while (i < side.size()) {
        if (side[i] == '(') {
            flush_bare();
            int depth = 1;
            std::size_t j = i + 1;
            while (j < side.size() && depth) {
                if (side[j] == '(') ++depth;
                if (side[j] == ')') --depth;
                ++j;
            }
            if (depth) throw std::invalid_argument("unbalanced parentheses");
            std::string body = side.substr(i + 1, j - i - 2);
            i = j;
            int exp = 1;
            if (i < side.size() && side[i] == '^') {
                std::size_t k = ++i;
                while (i < side.size() && isdigit((unsigned char)side[i])) ++i;
                exp = std::stoi(side.substr(k, i - k));
            }
            add_group(body, exp);
        } else {
            bare += side[i++];
        }
    }
    flush_bare();
}

}  // namespace detail

/// Parse expressions like "x", "(x+1)/x", "x^6+x^5+1", "y+x^4+1",
/// "(y+x^3)(y+x^3+x^2)^2/(y(y+x)(x^2+x+1)^3)", "y/x^3".
inline CurveFunction parse_function(const std::string& text) {
    CurveFunction fn;
    int sign = 1;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == '/' && depth == 0)) {
            detail::parse_product(text.substr(start, i - start), sign, fn.factors);
            start = i + 1;
            sign = -1;
        }
    }
    if (fn.factors.empty()) throw std::invalid_argument("empty function: " + text);
    return fn;
}

// ---------------------------------------------------------------------------
// Local parametrization at a place
// ---------------------------------------------------------------------------

/// x and y (the affine chart coordinates) expanded at a place in its
/// canonical parameter: U - U_0 in the place's chart when the chart equation
/// has a_chart(U_0) != 0, otherwise V - V_0.
struct LocalParam {
    Place place;
    LaurentSeries xs, ys;
};

namespace detail {

inline TruncSeries eval_poly2_trunc(gf2x::Poly2 p, const TruncSeries& u) {
    TruncSeries r(u.field(), u.prec());
    for (int i = gf2x::deg2(p); i >= 0; --i) {
        r = r * u;
        if (i >= 0 && ((p >> i) & 1)) r.at(0) ^= 1;
    }
    return r;
}

inline LaurentSeries eval_poly2_laurent(gf2x::Poly2 p, const LaurentSeries& u) {
    if (p == 0) throw std::invalid_argument("evaluating the zero polynomial");
    LaurentSeries r(u.field(), u.prec());
    LaurentSeries one = LaurentSeries::monomial(u.field(), 1, 0, u.prec());
    for (int i = gf2x::deg2(p); i >= 0; --i) {
        r = r * u;
        if ((p >> i) & 1) r = r + one;
    }
    return r;
}

}  // namespace detail

inline LocalParam local_param(const ArtinSchreierModel& m, const Place& pl, int prec) {
    const FieldRef& F = pl.F;
    auto [A, Fx] = m.chart(pl.rep.chart);
    std::uint32_t u0 = pl.rep.x, v0 = pl.rep.y;
    int iters = 1;
    while ((1 << iters) < prec + 1) ++iters;
    TruncSeries U(F, (std::size_t)prec), V(F, (std::size_t)prec);
    if (eval_poly2(F, A, u0) != 0) {
        // U = u0 + s; solve V by Newton, correction R / A(U)
        U.at(0) = u0;
        if (prec > 1) U.at(1) = 1;
        V.at(0) = v0;
        TruncSeries As = detail::eval_poly2_trunc(A, U);
        TruncSeries Fs = detail::eval_poly2_trunc(Fx, U);
        TruncSeries Ai = As.inv();
        for (int it = 0; it < iters + 1; ++it)
            V = V + (V * V + As * V + Fs) * Ai;
    } else {
        // s = V - v0; solve U by Newton against d/dU of the chart equation
        V.at(0) = v0;
        if (prec > 1) V.at(1) = 1;
        U.at(0) = u0;
        gf2x::Poly2 Ad = gf2x::derivative2(A), Fd = gf2x::derivative2(Fx);
        for (int it = 0; it < iters + 1; ++it) {
            TruncSeries R = V * V + detail::eval_poly2_trunc(A, U) * V +
                            detail::eval_poly2_trunc(Fx, U);
            TruncSeries D = detail::eval_poly2_trunc(Ad, U) * V +
                            detail::eval_poly2_trunc(Fd, U);
            if (!D.is_unit()) throw std::domain_error("singular point on the model");
            U = U + R * D.inv();
        }
    }
    LocalParam lp{pl, LaurentSeries(F, 0, U.coeffs()), LaurentSeries(F, 0, V.coeffs())};
    if (pl.rep.chart == 1) {
        // back to the affine coordinates: x = 1/X, y = Y/X^k
        LaurentSeries X = lp.xs, Y = lp.ys;
        lp.xs = X.inv();
        lp.ys = Y * X.pow(-m.k);
    }
    return lp;
}

/// Evaluate a function as a Laurent series in the canonical parameter.
inline LaurentSeries function_series(const LocalParam& lp, const CurveFunction& fn) {
    const FieldRef& F = lp.place.F;
    int p = std::min(lp.xs.prec(), lp.ys.prec());
    LaurentSeries r = LaurentSeries::monomial(F, 1, 0, p);
    for (const auto& f : fn.factors) {
        LaurentSeries fac(F, p);
        if (f.A) fac = fac + detail::eval_poly2_laurent(f.A, lp.xs);
        if (f.B) fac = fac + detail::eval_poly2_laurent(f.B, lp.xs) * lp.ys;
        if (fac.is_zero())
            throw std::domain_error("factor vanishes to working precision");
        r = r * fac.pow(f.exp);
    }
    return r;
}

/// Valuation of the function at the place, with automatic precision growth.
inline Int valuation_at(const ArtinSchreierModel& m, const Place& pl,
                        const CurveFunction& fn) {
    for (int prec = 24; prec <= 384; prec *= 2) {
        try {
            auto lp = local_param(m, pl, prec);
            Int v = 0;
            for (const auto& f : fn.factors) {
                LaurentSeries fac(pl.F, std::min(lp.xs.prec(), lp.ys.prec()));
                if (f.A) fac = fac + detail::eval_poly2_laurent(f.A, lp.xs);
                if (f.B) fac = fac + detail::eval_poly2_laurent(f.B, lp.xs) * lp.ys;
                v += Int(f.exp) * fac.val();  // throws on a zero series
            }
            return v;
        } catch (const std::domain_error&) {
            if (prec * 2 > 384) throw;
        }
    }
    throw std::domain_error("valuation did not stabilize");
}

// ---------------------------------------------------------------------------
// Divisors
// ---------------------------------------------------------------------------

inline std::string place_str(const Place& pl) {
    if (pl.rep.chart == 1) {
        if (pl.rep.x == 0 && pl.rep.y == 0) return "P(inf)";
        return "P(inf," + pl.F->elem_str(pl.rep.y) + ")";
    }
    return "P(" + pl.F->elem_str(pl.rep.x) + "," + pl.F->elem_str(pl.rep.y) + ")";
}

struct Divisor {
    std::map<Place, Int> coeffs;

    Int degree() const {
        Int d = 0;
        for (const auto& [pl, c] : coeffs) d += Int(pl.degree) * c;
        return d;
    }
    void add(const Place& pl, Int c) {
        auto it = coeffs.find(pl);
        Int v = (it == coeffs.end() ? Int(0) : it->second) + c;
        if (v == 0) coeffs.erase(pl);
        else coeffs[pl] = v;
    }
    bool operator==(const Divisor& o) const { return coeffs == o.coeffs; }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [pl, c] : coeffs) {
            Int mag = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1) os << mag.str() << "*";
            os << place_str(pl);
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

namespace detail {

inline gf2x::Poly2 div2(gf2x::Poly2 a, gf2x::Poly2 b) {
    gf2x::Poly2 q = 0;
    int db = gf2x::deg2(b);
    while (gf2x::deg2(a) >= db && a) {
        int sh = gf2x::deg2(a) - db;
        q |= gf2x::Poly2(1) << sh;
        a ^= b << sh;
    }
    return q;
}

inline std::vector<std::pair<gf2x::Poly2, int>> factor_poly2(gf2x::Poly2 p) {
    std::vector<std::pair<gf2x::Poly2, int>> out;
    for (int d = 1; p != 1 && d <= gf2x::deg2(p); ++d) {
        for (gf2x::Poly2 cand = gf2x::Poly2(1) << d;
             cand < (gf2x::Poly2(1) << (d + 1)) && p != 1; ++cand) {
            if (gf2x::deg2(p) < 2 * d) {
                // remainder is irreducible
                out.push_back({p, 1});
                p = 1;
                break;
            }
            if (!gf2x::irreducible2(cand)) continue;
            int mult = 0;
            while (gf2x::mod2(p, cand) == 0) {
                p = div2(p, cand);
                ++mult;
            }
            if (mult) out.push_back({cand, mult});
        }
    }
    return out;
}

}  // namespace detail

/// Principal divisor of a function. The support bound comes from factoring
/// the norm A^2 + A B a + B^2 f of each y-linear factor over F_2.
inline Divisor divisor_of(const ArtinSchreierModel& m, const CurveFunction& fn) {
    using gf2x::Poly2;
    int bound = 2;  // places over X = 0 have degree at most 2
    for (const auto& f : fn.factors) {
        Poly2 norm = gf2x::mul2(f.A, f.A) ^
                     gf2x::mul2(gf2x::mul2(f.A, f.B), m.a) ^
                     gf2x::mul2(gf2x::mul2(f.B, f.B), m.f);
        if (norm == 0) throw std::domain_error("function vanishes on the curve");
        // a pure polynomial in x can vanish on a place that is inert over
        // its x-coordinate, doubling the place degree
        int stretch = f.B == 0 ? 2 : 1;
        for (const auto& [irr, mult] : detail::factor_poly2(norm))
            bound = std::max(bound, stretch * gf2x::deg2(irr));
    }
    if (bound > 12)
        throw std::domain_error("divisor support exceeds the supported degree range");
    Divisor D;
    for (int d = 1; d <= bound; ++d) {
        for (const auto& pl : places_of_degree(m, d)) {
            if (pl.rep.chart == 0) {
                // finite point: only places where some factor vanishes matter
                bool relevant = false;
                for (const auto& f : fn.factors) {
                    std::uint32_t v = eval_poly2(pl.F, f.A, pl.rep.x);
                    if (f.B)
                        v ^= pl.F->mul(eval_poly2(pl.F, f.B, pl.rep.x), pl.rep.y);
                    if (v == 0) relevant = true;
                }
                if (!relevant) continue;
            }
            Int v = valuation_at(m, pl, fn);
            if (v != 0) D.add(pl, v);
        }
    }
    if (D.degree() != 0)
        throw std::domain_error("principal divisor does not balance");
    return D;
}

// ---------------------------------------------------------------------------
// Local expansion in a chosen uniformizer
// ---------------------------------------------------------------------------

/// Expand `fn` at `pl` as a Laurent series in the uniformizer `unif`
/// (which must have valuation 1 at the place) to the given precision.
inline LaurentSeries local_expand(const ArtinSchreierModel& m, const Place& pl,
                                  const CurveFunction& fn, const CurveFunction& unif,
                                  int prec) {
    for (int wp = prec + 8; wp <= 16 * (prec + 8); wp *= 2) {
        try {
            auto lp = local_param(m, pl, wp);
            LaurentSeries us = function_series(lp, unif);
            if (us.val() != 1)
                throw std::invalid_argument("not a uniformizer at " + place_str(pl));
            LaurentSeries fs = function_series(lp, fn);
            LaurentSeries r = fs.compose(us.reversion());
            if (r.prec() < prec) continue;
            return r.truncate(prec);
        } catch (const std::domain_error&) {
            if (wp * 2 > 16 * (prec + 8)) throw;
        }
    }
    throw std::domain_error("expansion did not reach the requested precision");
}

/// Expansion in the canonical parameter of the place.
inline LaurentSeries local_expand(const ArtinSchreierModel& m, const Place& pl,
                                  const CurveFunction& fn, int prec) {
    for (int wp = prec + 8; wp <= 16 * (prec + 8); wp *= 2) {
        try {
            auto lp = local_param(m, pl, wp);
            LaurentSeries r = function_series(lp, fn);
            if (r.prec() < prec) continue;
            return r.truncate(prec);
        } catch (const std::domain_error&) {
            if (wp * 2 > 16 * (prec + 8)) throw;
        }
    }
    throw std::domain_error("expansion did not reach the requested precision");
}

}  // namespace optcurves

#endif
