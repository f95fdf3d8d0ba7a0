#ifndef OPTCURVES_ZETA_HPP
#define OPTCURVES_ZETA_HPP

#include <stdexcept>
#include <vector>

#include "optcurves/int_poly.hpp"

namespace optcurves {

/// Monic degree-g polynomial whose roots are the real parts mu_i = alpha_i +
/// conj(alpha_i) of the Frobenius eigenvalues.
struct RealWeilPoly {
    IntPoly h;
    int q = 2;

    RealWeilPoly(IntPoly poly, int base = 2) : h(std::move(poly)), q(base) {
        if (h.degree() < 0 || !h.is_monic())
            throw std::invalid_argument("real Weil polynomial must be monic");
    }
    int genus() const { return h.degree(); }
};

/// Numerator of the zeta function, degree 2g, constant term 1.
struct LPoly {
    IntPoly L;
    int q = 2;

    LPoly(IntPoly poly, int base = 2) : L(std::move(poly)), q(base) {
        int d = L.degree();
        if (d < 0 || d % 2 != 0) throw std::invalid_argument("L must have even degree");
        int g = d / 2;
        if (L[0] != 1) throw std::invalid_argument("L(0) must be 1");
        if (L.lc() != pow_int(Int(q), unsigned(g)))
            throw std::invalid_argument("leading coefficient must be q^g");
        for (int i = 0; i <= g; ++i)
            if (L[2 * g - i] != pow_int(Int(q), unsigned(g - i)) * L[i])
                throw std::invalid_argument("L violates the functional equation");
    }
    int genus() const { return L.degree() / 2; }
};

/// Place counts a_1..a_dmax with validity flags filled by the inversion.
struct AVector {
    std::vector<Int> a;
    bool all_integral = true;
    bool all_nonnegative = true;

    bool valid() const { return all_integral && all_nonnegative; }
};

/// L(t) = t^g h(qt + 1/t), expanded as sum_k h_k (q t^2 + 1)^k t^(g-k).
inline LPoly l_from_h(const RealWeilPoly& hw) {
    int g = hw.genus();
    IntPoly base{Int(1), Int(0), Int(hw.q)};  // 1 + q t^2
    IntPoly acc;                              // zero
    IntPoly basek{Int(1)};
    std::vector<IntPoly> powers(g + 1);
    for (int k = 0; k <= g; ++k) {
        powers[k] = basek;
        basek = basek * base;
    }
    for (int k = 0; k <= g; ++k)
        acc = acc + powers[k] * IntPoly::monomial(hw.h[k], unsigned(g - k));
    return LPoly(acc, hw.q);
}

/// Inverse of l_from_h by a triangular solve: the t^j coefficient of the
/// residual determines h_(g-j).
inline RealWeilPoly h_from_l(const LPoly& lp) {
    int g = lp.genus();
    IntPoly base{Int(1), Int(0), Int(lp.q)};
    IntPoly residual = lp.L;
    std::vector<Int> h(g + 1, 0);
    IntPoly basek{Int(1)};
    std::vector<IntPoly> powers(g + 1);
    for (int k = 0; k <= g; ++k) {
        powers[k] = basek;
        basek = basek * base;
    }
    for (int j = 0; j <= g; ++j) {
        Int c = residual[j];
        h[g - j] = c;
        residual = residual - powers[g - j] * IntPoly::monomial(c, unsigned(j));
    }
    if (!residual.is_zero())
        throw std::invalid_argument("L is not of the form t^g h(qt + 1/t)");
    return RealWeilPoly(IntPoly(std::move(h)), lp.q);
}

/// Power sums p_n of the reciprocal roots of L by Newton's identities;
/// N_n = q^n + 1 - p_n.
inline std::vector<Int> nvector_from_l(const LPoly& lp, int nmax) {
    int deg = lp.L.degree();
    // L(t) = prod (1 - alpha_i t): elementary symmetric e_k = (-1)^k L_k
    std::vector<Int> e(nmax + 1, 0);
    for (int k = 1; k <= nmax && k <= deg; ++k)
        e[k] = (k % 2 ? -lp.L[k] : lp.L[k]);
    std::vector<Int> p(nmax + 1, 0);
    for (int n = 1; n <= nmax; ++n) {
        Int s = 0;
        for (int i = 1; i < n; ++i) {
            Int term = e[i] * p[n - i];
            s += (i % 2 ? term : -term);
        }
        s += (n % 2 ? Int(n) * e[n] : -Int(n) * e[n]);
        p[n] = s;
    }
    std::vector<Int> N(nmax);
    for (int n = 1; n <= nmax; ++n)
        N[n - 1] = pow_int(Int(lp.q), unsigned(n)) + 1 - p[n];
    return N;
}

/// Moebius inversion a_d = (1/d) sum_{e|d} mu(d/e) N_e; non-integral or
/// negative entries are flagged, never rounded.
inline AVector avector_from_nvector(const std::vector<Int>& N) {
    AVector out;
    out.a.resize(N.size());
    for (unsigned d = 1; d <= N.size(); ++d) {
        Int s = 0;
        for (unsigned e : divisors_of(d)) s += Int(moebius(d / e)) * N[e - 1];
        if (s % d != 0) {
            out.all_integral = false;
            out.a[d - 1] = s;  // raw numerator, marked invalid
        } else {
            out.a[d - 1] = s / d;
        }
        if (out.a[d - 1] < 0) out.all_nonnegative = false;
    }
    return out;
}

inline std::vector<Int> nvector_from_avector(const std::vector<Int>& a) {
    std::vector<Int> N(a.size(), 0);
    for (unsigned e = 1; e <= a.size(); ++e)
        for (unsigned d : divisors_of(e)) N[e - 1] += Int(d) * a[d - 1];
    return N;
}

/// #Pic^0 = L(1) = h(q+1).
inline Int class_number(const RealWeilPoly& hw) {
    Int n = hw.h.eval(Int(hw.q + 1));
    if (n <= 0) throw std::domain_error("class number not positive");
    return n;
}

}  // namespace optcurves

#endif
