#ifndef OPTCURVES_WEILENUM_HPP
#define OPTCURVES_WEILENUM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "optcurves/sturm.hpp"
#include "optcurves/zeta.hpp"

namespace optcurves {

// ---------------------------------------------------------------------------
// Integer factorization of the small polynomials in play (degree <= 7):
// rational roots first, then Kronecker interpolation for higher factors.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Int> integer_divisors(const Int& n) {
    std::vector<Int> out;
    Int a = abs_of(n);
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(-out[i]);
    return out;
}

/// Lagrange interpolation through (i, values[i]) for i = 0..d; returns the
/// polynomial only if all coefficients are integers.
inline std::optional<IntPoly> interpolate_integer(const std::vector<Int>& values) {
    int d = (int)values.size() - 1;
    std::vector<Rat> acc(d + 1, Rat(0));
    for (int i = 0; i <= d; ++i) {
        // basis polynomial prod_{j != i} (t - j)/(i - j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= d; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (int k = (int)basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - Rat(j) * basis[k];
            basis[0] = -Rat(j) * basis[0];
            denom *= Rat(i - j);
        }
        for (int k = 0; k <= d; ++k) acc[k] += Rat(values[i]) / denom * basis[k];
    }
    std::vector<Int> c(d + 1);
    for (int k = 0; k <= d; ++k) {
        if (boost::multiprecision::denominator(acc[k]) != 1) return std::nullopt;
        c[k] = boost::multiprecision::numerator(acc[k]);
    }
    return IntPoly(std::move(c));
}

}  // namespace detail

/// Irreducible factorization over Z of a primitive polynomial; returns
/// (factor, multiplicity) pairs with positive leading coefficients, sorted.
/// A leading unit -1 is returned as a factor (-1, multiplicity 1).
inline std::vector<std::pair<IntPoly, int>> factor_over_z(IntPoly f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor zero");
    std::vector<std::pair<IntPoly, int>> factors;
    Int cont = f.content() * (sign_of(f.lc()) < 0 ? -1 : 1);
    if (cont != 1) factors.push_back({IntPoly{cont}, 1});
    f = f.primitive_part();
    if (sign_of(f.lc()) < 0) f = f * Int(-1);

    auto record = [&](const IntPoly& p) {
        for (auto& [q, m] : factors)
            if (q == p) {
                ++m;
                return;
            }
        factors.push_back({p, 1});
    };

    // strip powers of t
    while (f.degree() > 0 && f[0] == 0) {
        record(IntPoly::monomial(1, 1));
        f = *f.divide_exact(IntPoly::monomial(1, 1));
    }
    // rational roots: p/q with p | f(0), q | lc
    bool progress = true;
    while (progress && f.degree() > 0) {
        progress = false;
        for (const Int& p : detail::integer_divisors(f[0])) {
            for (const Int& q : detail::integer_divisors(f.lc())) {
                if (q <= 0) continue;
                if (gcd_int(abs_of(p), q) != 1) continue;
                if (f.eval(Rat(p) / Rat(q)) == 0) {
                    IntPoly lin{-p, q};
                    auto quo = (f * pow_int(q, unsigned(f.degree()))).divide_exact(lin);
                    // exact division may need clearing the content afterwards
                    if (!quo) continue;
                    record(lin);
                    f = quo->primitive_part();
                    if (sign_of(f.lc()) < 0) f = f * Int(-1);
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
    }
    // Kronecker for factors of degree 2..deg/2
    for (int d = 2; f.degree() >= 2 * d;) {
        std::vector<std::vector<Int>> divisor_sets(d + 1);
        bool zero_value = false;
        for (int i = 0; i <= d; ++i) {
            Int v = f.eval(Int(i));
            if (v == 0) zero_value = true;  // cannot happen: roots stripped
            divisor_sets[i] = detail::integer_divisors(v);
        }
        if (zero_value) throw std::logic_error("unstripped integer root");
        bool found = false;
        std::vector<std::size_t> idx(d + 1, 0);
        for (;;) {
            std::vector<Int> vals(d + 1);
            for (int i = 0; i <= d; ++i) vals[i] = divisor_sets[i][idx[i]];
            auto cand = detail::interpolate_integer(vals);
            if (cand && cand->degree() == d) {
                IntPoly c = *cand;
                if (sign_of(c.lc()) < 0) c = c * Int(-1);
                if (c.content() == 1) {
                    auto quo = f.divide_exact(c);
                    if (quo) {
                        record(c);
                        f = quo->primitive_part();
                        found = true;
                        break;
                    }
                }
            }
            int i = 0;
            while (i <= d && ++idx[i] == divisor_sets[i].size()) idx[i++] = 0;
            if (i > d) break;
        }
        if (!found) ++d;
    }
    if (f.degree() > 0 || f.lc() != 1) record(f);
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return false;
    });
    return factors;
}

// ---------------------------------------------------------------------------
// Filters and obligations
// ---------------------------------------------------------------------------

struct Res1Result {
    bool pass = true;
    IntPoly h1, h2;  // witness split when failing
};

/// A candidate survives when no coprime split h = h1*h2 has resultant +-1.
inline Res1Result filter_res1(const RealWeilPoly& hw) {
    auto factors = factor_over_z(hw.h);
    std::vector<std::pair<IntPoly, int>> irr;
    for (const auto& fm : factors)
        if (fm.first.degree() > 0) irr.push_back(fm);
    std::size_t k = irr.size();
    if (k < 2) return {};
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
        IntPoly h1{Int(1)}, h2{Int(1)};
        for (std::size_t i = 0; i < k; ++i) {
            IntPoly& dst = (mask >> i) & 1 ? h1 : h2;
            for (int m = 0; m < irr[i].second; ++m) dst = dst * irr[i].first;
        }
        Int r = resultant(h1, h2);
        if (r == 1 || r == -1) return {false, h1, h2};
    }
    return {};
}

enum class ObligationKind { Res2, EllFact };

struct Obligation {
    ObligationKind kind;
    IntPoly h1, h2;     // the split: h1 the (radical of the) base side
    Int value;          // reduced resultant (Res2) or resultant (EllFact)
    int covering_degree;  // 2 for Res2; divides |value| for EllFact
};

/// For every coprime split, record the covering-map consequences the
/// resultant arithmetic forces.
inline std::vector<Obligation> obligations_res2_ellfact(const RealWeilPoly& hw) {
    std::vector<Obligation> out;
    auto factors = factor_over_z(hw.h);
    std::vector<std::pair<IntPoly, int>> irr;
    for (const auto& fm : factors)
        if (fm.first.degree() > 0) irr.push_back(fm);
    std::size_t k = irr.size();
    if (k < 2) return out;
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << k); ++mask) {
        // avoid duplicate mirrored splits for Res2 (symmetric); keep the
        // side with the smaller lowest factor index as h1
        IntPoly h1{Int(1)}, h2{Int(1)}, rad1{Int(1)}, rad2{Int(1)};
        for (std::size_t i = 0; i < k; ++i) {
            bool left = (mask >> i) & 1;
            IntPoly& dst = left ? h1 : h2;
            IntPoly& rad = left ? rad1 : rad2;
            for (int m = 0; m < irr[i].second; ++m) dst = dst * irr[i].first;
            rad = rad * irr[i].first;
        }
        if ((mask & 1) == 1) {  // each unordered split once
            Int rr = reduced_resultant(rad1, rad2);
            if (rr == 2) out.push_back({ObligationKind::Res2, h1, h2, rr, 2});
        }
        if (h1.degree() == 1 && h1.is_monic()) {
            Int r = resultant(h1, radical(h2));
            if (r != 1 && r != -1)
                out.push_back({ObligationKind::EllFact, h1, h2, r,
                               (int)abs_of(r)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Double-cover feasibility
// ---------------------------------------------------------------------------

/// One conductor shape: multiset of (place degree, even conductor exponent).
using ConductorShape = std::vector<std::pair<int, int>>;

struct FeasibilityVerdict {
    enum class Status { Feasible, Contradiction, Indeterminate } status;
    std::vector<ConductorShape> shapes;  // when feasible
    std::string reason;
};

namespace detail {

/// Distribute `residual` among ramified places as extra even exponent, each
/// unit of extra exponent 2 on a degree-d place costing 2d. Emits all
/// distinct shapes.
inline void distribute_exponents(const std::vector<int>& ram_degrees, std::size_t i,
                                 Int residual, std::vector<int>& extra,
                                 std::vector<ConductorShape>& out) {
    if (i == ram_degrees.size()) {
        if (residual == 0) {
            ConductorShape s;
            for (std::size_t j = 0; j < ram_degrees.size(); ++j)
                s.push_back({ram_degrees[j], 2 + 2 * extra[j]});
            std::sort(s.begin(), s.end());
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
        return;
    }
    Int step = 2 * ram_degrees[i];
    for (Int k = 0; k * step <= residual; ++k) {
        extra[i] = (int)k;
        distribute_exponents(ram_degrees, i + 1, residual - k * step, extra, out);
    }
    extra[i] = 0;
}

}  // namespace detail

/// Exhaustive check whether the cover's place counts and Riemann-Hurwitz can
/// be realized by a degree-2 map onto a base with the given a-vector.
inline FeasibilityVerdict double_cover_feasibility(const RealWeilPoly& h_cover,
                                                   const std::vector<Int>& base_a,
                                                   int base_genus) {
    int g_cover = h_cover.genus();
    LPoly L = l_from_h(h_cover);
    int depth = (int)base_a.size();
    auto cover_a = avector_from_nvector(nvector_from_l(L, depth));
    if (!cover_a.valid())
        return {FeasibilityVerdict::Status::Contradiction, {},
                "cover has an invalid place-count vector"};

    Int deg_cond = Int(2 * g_cover - 2) - 2 * Int(2 * base_genus - 2);
    if (deg_cond < 0 || deg_cond % 2 != 0)
        return {FeasibilityVerdict::Status::Contradiction, {},
                "Riemann-Hurwitz leaves no admissible conductor degree"};

    // depth-first over (split, inert, ramified) counts per base degree
    std::vector<ConductorShape> shapes;
    bool indeterminate = false;
    std::string last_reason = "no assignment of place behaviors matches the cover";

    // inert_at[d] = number of base places of degree d chosen inert
    std::vector<Int> inert_at(depth + 1, 0);
    std::vector<int> ram_degrees;
    Int cond_used = 0;  // running minimum conductor degree of chosen ramification

    auto rec = [&](auto&& self, int d) -> void {
        if (d > depth) {
            // every ramified place carries even exponent >= 2
            Int min_cond = 0;
            for (int rd : ram_degrees) min_cond += 2 * rd;
            if (min_cond > deg_cond) {
                last_reason = "ramification already exceeds the conductor degree";
                return;
            }
            Int residual = deg_cond - min_cond;
            std::size_t before = shapes.size();
            std::vector<int> extra(ram_degrees.size(), 0);
            detail::distribute_exponents(ram_degrees, 0, residual, extra, shapes);
            if (shapes.size() == before && residual > 0) {
                // leftover conductor degree could sit on unseen places of
                // degree > depth, each costing at least 2(depth+1)
                if (residual >= 2 * (depth + 1))
                    indeterminate = true;
                else
                    last_reason =
                        "leftover conductor degree too small for any further "
                        "ramified place";
            }
            return;
        }
        Int ad_base = base_a[d - 1];
        Int ad_cover = cover_a.a[d - 1];
        Int inherited = (d % 2 == 0) ? inert_at[d / 2] : Int(0);
        // 2s + r = ad_cover - inherited, s + r <= ad_base
        Int rhs = ad_cover - inherited;
        if (rhs < 0) {
            last_reason = "inert places overshoot the cover's place count";
            return;
        }
        // each ramified place of degree d costs at least 2d of conductor
        for (Int r = 0; r <= rhs && cond_used + 2 * d * r <= deg_cond; ++r) {
            if ((rhs - r) % 2 != 0) continue;
            Int s = (rhs - r) / 2;
            if (s + r > ad_base) continue;
            inert_at[d] = ad_base - s - r;
            cond_used += 2 * d * r;
            for (Int j = 0; j < r; ++j) ram_degrees.push_back(d);
            self(self, d + 1);
            for (Int j = 0; j < r; ++j) ram_degrees.pop_back();
            cond_used -= 2 * d * r;
        }
        inert_at[d] = 0;
    };
    rec(rec, 1);

    if (!shapes.empty()) {
        std::sort(shapes.begin(), shapes.end());
        return {FeasibilityVerdict::Status::Feasible, shapes, ""};
    }
    if (indeterminate)
        return {FeasibilityVerdict::Status::Indeterminate, {},
                "validation depth insufficient to decide"};
    return {FeasibilityVerdict::Status::Contradiction, {}, last_reason};
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct SearchSpec {
    int g = 1;
    int q = 2;
    Int target_a1 = 0;
    int dmax = 0;               // 0 means the 2g default
    bool a1_bound_check = true;  // Serre's linear bound on rational points

    int depth() const { return dmax > 0 ? dmax : 2 * g; }
};

struct CandidateReport {
    RealWeilPoly h;
    std::vector<Int> a;
    Res1Result res1;
    std::vector<Obligation> obligations;
    std::vector<FeasibilityVerdict> feasibility;  // parallel to obligations
};

struct EnumerationResult {
    std::vector<CandidateReport> candidates;
    bool infeasible_spec = false;
    std::string flag;
};

namespace detail {

/// floor(2g * 2^(d/2)) exactly
inline Int weil_defect_bound(int g, int d) {
    return isqrt(Int(4) * g * g * pow_int(Int(2), unsigned(d)));
}

/// e_1..e_g from power sums via Newton; nullopt when some e_k is fractional.
inline std::optional<std::vector<Int>> elementary_from_power_sums(
    const std::vector<Int>& p) {
    int g = (int)p.size();
    std::vector<Int> e(g + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= g; ++k) {
        Int s = 0;
        for (int i = 1; i <= k; ++i) {
            Int term = e[k - i] * p[i - 1];
            s += (i % 2 ? term : -term);
        }
        if (s % k != 0) return std::nullopt;
        e[k] = s / k;
    }
    e.erase(e.begin());
    return e;
}

}  // namespace detail

/// Build the candidate h for a full a_1..a_g prescription; nullopt when the
/// prescription is not realizable by an integral symmetric L-polynomial.
inline std::optional<RealWeilPoly> h_from_place_counts(const std::vector<Int>& a,
                                                       int q = 2) {
    int g = (int)a.size();
    auto N = nvector_from_avector(a);
    std::vector<Int> p(g);
    for (int n = 1; n <= g; ++n) p[n - 1] = pow_int(Int(q), unsigned(n)) + 1 - N[n - 1];
    auto e = detail::elementary_from_power_sums(p);
    if (!e) return std::nullopt;
    std::vector<Int> c(2 * g + 1);
    c[0] = 1;
    for (int k = 1; k <= g; ++k) c[k] = (k % 2 ? -(*e)[k - 1] : (*e)[k - 1]);
    for (int k = 0; k < g; ++k) c[2 * g - k] = pow_int(Int(q), unsigned(g - k)) * c[k];
    return h_from_l(LPoly(IntPoly(std::move(c)), q));
}

inline EnumerationResult enumerate_candidates(const SearchSpec& spec) {
    EnumerationResult out;
    int g = spec.g;
    if (g < 1) throw std::invalid_argument("genus must be positive");
    Int hasse_weil = Int(spec.q) + 1 + isqrt(Int(4 * g * g * spec.q));
    if (spec.target_a1 > hasse_weil) {
        out.infeasible_spec = true;
        out.flag = "requested point count exceeds the Hasse-Weil bound " +
                   hasse_weil.str();
        return out;
    }
    if (spec.a1_bound_check) {
        // floor(0.83 g + 5.35) without floating point
        Int serre = (Int(83) * g + 535) / 100;
        if (spec.target_a1 > serre) {
            out.infeasible_spec = true;
            out.flag = "requested point count exceeds the linear bound " +
                       serre.str();
            return out;
        }
    }

    int depth = spec.depth();
    std::vector<Int> a(g, 0);
    a[0] = spec.target_a1;
    std::vector<Int> N(g, 0);
    N[0] = spec.target_a1;

    auto emit = [&](const std::vector<Int>& avec) {
        // extend the power sums p_n of the Frobenius eigenvalues to n = 2g by
        // Newton's identities, completing the elementary symmetric functions
        // with e_(2g-k) = q^(g-k) e_k; the Weil window |N_n - q^n - 1| <=
        // 2g q^(n/2) then prunes nearly every leaf without any polynomial work
        auto Nv = nvector_from_avector(avec);
        std::vector<Int> p(2 * g);
        for (int n = 1; n <= g; ++n)
            p[(std::size_t)n - 1] = pow_int(Int(spec.q), unsigned(n)) + 1 - Nv[(std::size_t)n - 1];
        auto eg = detail::elementary_from_power_sums(
            std::vector<Int>(p.begin(), p.begin() + g));
        if (!eg) return;
        std::vector<Int> e(2 * g + 1, 0);
        e[0] = 1;
        for (int k = 1; k <= g; ++k) e[(std::size_t)k] = (*eg)[(std::size_t)k - 1];
        for (int k = 0; k < g; ++k)
            e[(std::size_t)(2 * g - k)] =
                pow_int(Int(spec.q), unsigned(g - k)) * e[(std::size_t)k];
        for (int n = g + 1; n <= 2 * g; ++n) {
            Int s = 0;
            for (int i = 1; i < n && i <= 2 * g; ++i) {
                Int term = e[(std::size_t)i] * p[(std::size_t)(n - i - 1)];
                s += (i % 2 ? term : -term);
            }
            s += (n % 2 ? Int(n) * e[(std::size_t)n] : -Int(n) * e[(std::size_t)n]);
            p[(std::size_t)n - 1] = s;
            Int dev = s;  // N_n - q^n - 1 = -p_n
            if (dev * dev > Int(4) * g * g * pow_int(Int(spec.q), unsigned(n))) return;
        }
        auto h = h_from_place_counts(avec, spec.q);
        if (!h) return;
        auto Nfull = nvector_from_l(l_from_h(*h), depth);
        auto afull = avector_from_nvector(Nfull);
        if (!afull.valid()) return;
        if (afull.a[0] != spec.target_a1) return;
        auto rc = count_roots_in_weil_interval(h->h, spec.q);
        if (!rc.all_in_interval) return;
        auto res1 = filter_res1(*h);
        if (!res1.pass) return;
        CandidateReport rep{*h, afull.a, res1, obligations_res2_ellfact(*h), {}};
        for (const auto& ob : rep.obligations) {
            if (ob.covering_degree == 2 && ob.h1.degree() >= 1) {
                // base side = h1, its genus = deg h1
                auto base_L = l_from_h(RealWeilPoly(ob.h1, spec.q));
                auto base_a =
                    avector_from_nvector(nvector_from_l(base_L, depth));
                rep.feasibility.push_back(double_cover_feasibility(
                    *h, base_a.a, ob.h1.degree()));
            } else {
                rep.feasibility.push_back(
                    {FeasibilityVerdict::Status::Indeterminate, {},
                     "no degree-2 covering forced"});
            }
        }
        out.candidates.push_back(std::move(rep));
    };

    auto rec = [&](auto&& self, int d) -> void {
        if (d > g) {
            emit(a);
            return;
        }
        // N_d = d*a_d + sum over proper divisors; window from the Weil bound
        Int partial = 0;
        for (unsigned e : divisors_of(unsigned(d)))
            if ((int)e < d) partial += Int(e) * a[e - 1];
        Int upper = pow_int(Int(spec.q), unsigned(d)) + 1 +
                    detail::weil_defect_bound(g, d);
        Int lower = pow_int(Int(spec.q), unsigned(d)) + 1 -
                    detail::weil_defect_bound(g, d);
        if (lower < 0) lower = 0;
        for (unsigned e : divisors_of(unsigned(d)))
            if ((int)e < d) lower = std::max(lower, N[e - 1]);
        for (Int ad = 0;; ++ad) {
            Int Nd = partial + Int(d) * ad;
            if (Nd > upper) break;
            if (Nd < lower) continue;
            a[d - 1] = ad;
            N[d - 1] = Nd;
            // the elementary symmetric functions must stay integral; e_d
            // depends only on N_1..N_d, so a fractional value kills the
            // whole subtree
            std::vector<Int> p(d);
            for (int n = 1; n <= d; ++n)
                p[n - 1] = pow_int(Int(spec.q), unsigned(n)) + 1 - N[n - 1];
            if (!detail::elementary_from_power_sums(p)) continue;
            self(self, d + 1);
        }
        a[d - 1] = 0;
    };
    if (g == 1)
        emit(a);
    else
        rec(rec, 2);

    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const CandidateReport& x, const CandidateReport& y) {
                  const IntPoly &p = x.h.h, &q = y.h.h;
                  for (int i = std::max(p.degree(), q.degree()); i >= 0; --i)
                      if (p[i] != q[i]) return p[i] < q[i];
                  return false;
              });
    return out;
}

// ---------------------------------------------------------------------------
// Genus-7 parametric family
// ---------------------------------------------------------------------------

struct TailCandidate {
    Int alpha, beta;
    RealWeilPoly h;
    std::vector<Int> a;
};

/// Complete a degree-7 real Weil polynomial from place counts a_1..a_5; the
/// two lowest coefficients stay free and are scanned over the integer box the
/// root bounds allow. An optional parity constraint on a_6 prunes the result.
inline std::vector<TailCandidate> parametric_tail_search(
    const std::vector<Int>& prefix, std::optional<int> a6_parity = std::nullopt,
    int q = 2) {
    if (prefix.size() != 5) throw std::invalid_argument("prefix must be a_1..a_5");
    const int g = 7;
    // L's coefficients c_1..c_5 from the prefix, c_9..c_14 by symmetry,
    // c_6..c_8 unknown; equivalently h_2..h_7 are determined and
    // (alpha, beta) = (h_1, h_0) are free.
    auto N5 = nvector_from_avector(prefix);
    std::vector<Int> p(5);
    for (int n = 1; n <= 5; ++n) p[n - 1] = pow_int(Int(q), unsigned(n)) + 1 - N5[n - 1];
    auto e = detail::elementary_from_power_sums(p);
    if (!e) throw std::invalid_argument("prefix not realizable integrally");
    // triangular solve for h_7..h_2 from c_0..c_5 as in h_from_l
    IntPoly base{Int(1), Int(0), Int(q)};
    std::vector<IntPoly> powers(g + 1);
    IntPoly bk{Int(1)};
    for (int k = 0; k <= g; ++k) {
        powers[k] = bk;
        bk = bk * base;
    }
    std::vector<Int> c(6);
    c[0] = 1;
    for (int k = 1; k <= 5; ++k) c[k] = (k % 2 ? -(*e)[k - 1] : (*e)[k - 1]);
    std::vector<Int> h(g + 1, 0);
    IntPoly residual{std::vector<Int>(c)};
    for (int j = 0; j <= 5; ++j) {
        Int cj = residual[j];
        h[g - j] = cj;
        residual = residual - powers[g - j] * IntPoly::monomial(cj, unsigned(j));
    }

    auto with_ab = [&](const Int& alpha, const Int& beta) {
        std::vector<Int> hc(h);
        hc[1] = alpha;
        hc[0] = beta;
        return RealWeilPoly(IntPoly(std::move(hc)), q);
    };
    auto n67 = [&](const Int& alpha, const Int& beta) {
        return nvector_from_l(l_from_h(with_ab(alpha, beta)), 7);
    };

    // N_6 is affine in alpha alone, N_7 affine in (alpha, beta); read the
    // coefficients off three evaluations
    auto n00 = n67(0, 0), n10 = n67(1, 0), n01 = n67(0, 1);
    Int d6a = n10[5] - n00[5];
    Int d7a = n10[6] - n00[6];
    Int d7b = n01[6] - n00[6];
    if (d6a == 0 || d7b == 0) throw std::logic_error("degenerate tail family");

    Int b6 = detail::weil_defect_bound(g, 6), b7 = detail::weil_defect_bound(g, 7);
    Int n6_lo = pow_int(Int(q), 6) + 1 - b6, n6_hi = pow_int(Int(q), 6) + 1 + b6;
    Int n7_lo = pow_int(Int(q), 7) + 1 - b7, n7_hi = pow_int(Int(q), 7) + 1 + b7;

    std::vector<TailCandidate> out;
    // alpha window from the N_6 band
    for (Int alpha = -200; alpha <= 200; ++alpha) {
        Int N6 = n00[5] + d6a * alpha;
        if (N6 < n6_lo || N6 > n6_hi) continue;
        for (Int beta = -400; beta <= 400; ++beta) {
            Int N7 = n00[6] + d7a * alpha + d7b * beta;
            if (N7 < n7_lo || N7 > n7_hi) continue;
            RealWeilPoly cand = with_ab(alpha, beta);
            auto rc = count_roots_in_weil_interval(cand.h, q);
            if (!rc.all_in_interval) continue;
            auto Nfull = nvector_from_l(l_from_h(cand), 14);
            auto afull = avector_from_nvector(Nfull);
            if (!afull.valid()) continue;
            bool prefix_ok = true;
            for (int d = 1; d <= 5; ++d)
                if (afull.a[d - 1] != prefix[d - 1]) prefix_ok = false;
            if (!prefix_ok) continue;
            if (a6_parity && afull.a[5] % 2 != *a6_parity) continue;
            out.push_back({alpha, beta, cand, afull.a});
        }
    }
    std::sort(out.begin(), out.end(), [](const TailCandidate& x, const TailCandidate& y) {
        if (x.alpha != y.alpha) return x.alpha < y.alpha;
        return x.beta < y.beta;
    });
    return out;
}

}  // namespace optcurves

#endif
