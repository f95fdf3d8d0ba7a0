#ifndef OPTCURVES_STURM_HPP
#define OPTCURVES_STURM_HPP

#include <stdexcept>
#include <vector>

#include "optcurves/int_poly.hpp"

namespace optcurves {

/// Exact value a + b*sqrt(2).
struct QuadValue {
    Int a;
    Int b;

    /// exact sign in {-1, 0, 1}
    int sign() const {
        int sa = sign_of(a), sb = sign_of(b);
        if (sa == 0 && sb == 0) return 0;
        if (sa >= 0 && sb >= 0) return 1;
        if (sa <= 0 && sb <= 0) return -1;
        // opposite signs: compare a^2 with 2 b^2
        Int d = a * a - 2 * b * b;
        int sd = sign_of(d);
        return sa > 0 ? sd : -sd;
    }
    bool is_zero() const { return a == 0 && b == 0; }
};

/// p evaluated at s*2*sqrt(2), s in {-1, +1}, as an exact QuadValue.
inline QuadValue eval_at_2sqrt2(const IntPoly& p, int s) {
    QuadValue v{0, 0};
    Int pow8 = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 0) {
            v.a += p[i] * pow8;
        } else {
            v.b += p[i] * pow8 * 2 * (s < 0 ? -1 : 1);
        }
        if (i % 2 == 1) pow8 *= 8;
    }
    return v;
}

/// Sturm chain of a squarefree polynomial, content removed at each step.
inline std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_part());
    if (p.degree() >= 1) {
        chain.push_back(p.derivative().primitive_part());
        while (chain.back().degree() >= 1) {
            IntPoly r = pseudo_rem_signed(chain[chain.size() - 2], chain.back());
            if (r.is_zero()) break;
            chain.push_back((-r).primitive_part());
        }
    }
    return chain;
}

namespace detail {

inline int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace detail

/// Number of distinct real roots of p (whole real line).
inline int count_distinct_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
    IntPoly r = radical(p);
    if (r.degree() < 1) return 0;
    auto chain = sturm_chain(r);
    std::vector<int> lo, hi;
    for (const auto& q : chain) {
        int s = sign_of(q.lc());
        hi.push_back(s);
        lo.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return detail::variations(lo) - detail::variations(hi);
}

struct WeilRootCount {
    int count;             ///< distinct real roots in [-2*sqrt(2), 2*sqrt(2)]
    bool all_in_interval;  ///< all complex roots real and inside the interval
};

/// Distinct roots of h in the closed interval [-2*sqrt(q), 2*sqrt(q)].
/// Only q = 2 is supported.
inline WeilRootCount count_roots_in_weil_interval(const IntPoly& h, int q = 2) {
    if (q != 2)
        throw std::domain_error("count_roots_in_weil_interval: only q = 2");
    if (h.is_zero()) throw std::domain_error("zero polynomial");
    IntPoly r = radical(h);
    const int distinct = r.degree();
    int count = 0;
    // the endpoints themselves are the roots of t^2 - 8
    const IntPoly end{Int(-8), Int(0), Int(1)};
    if (auto q2 = r.divide_exact(end)) {
        count += 2;
        r = *q2;
    }
    if (r.degree() >= 1) {
        auto chain = sturm_chain(r);
        std::vector<int> lo, hi;
        for (const auto& p : chain) {
            lo.push_back(eval_at_2sqrt2(p, -1).sign());
            hi.push_back(eval_at_2sqrt2(p, +1).sign());
        }
        count += detail::variations(lo) - detail::variations(hi);
    }
    return {count, count == distinct};
}

}  // namespace optcurves

#endif
