#ifndef OPTCURVES_GF_HPP
#define OPTCURVES_GF_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace optcurves {

namespace gf2x {

/// Polynomials over F_2 as bitmasks, bit i = coefficient of x^i.
using Poly2 = std::uint64_t;

inline int deg2(Poly2 p) {
    if (p == 0) return -1;
    return 63 - __builtin_clzll(p);
}

inline Poly2 mul2(Poly2 a, Poly2 b) {
    Poly2 r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline Poly2 mod2(Poly2 a, Poly2 m) {
    int dm = deg2(m);
    int da = deg2(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = deg2(a);
    }
    return a;
}

inline Poly2 mulmod2(Poly2 a, Poly2 b, Poly2 m) { return mod2(mul2(a, b), m); }

inline Poly2 gcd2(Poly2 a, Poly2 b) {
    while (b) {
        Poly2 r = mod2(a, b);
        a = b;
        b = r;
    }
    return a;
}

/// x^(2^k) mod m by repeated squaring of residues
inline Poly2 frob_iter(Poly2 x, unsigned k, Poly2 m) {
    for (unsigned i = 0; i < k; ++i) x = mulmod2(x, x, m);
    return x;
}

/// Irreducibility over F_2 (Rabin's test), deg m = n.
inline bool irreducible2(Poly2 f) {
    int n = deg2(f);
    if (n <= 0) return false;
    Poly2 x = 2;
    // x^(2^n) == x mod f
    if (frob_iter(x, unsigned(n), f) != mod2(x, f)) return false;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        Poly2 t = frob_iter(x, unsigned(n / p), f) ^ mod2(x, f);
        if (t == 0 || gcd2(t, f) != 1) return false;
    }
    return true;
}

inline Poly2 derivative2(Poly2 p) {
    // odd-degree terms survive, shifted down
    return (p >> 1) & 0x5555555555555555ull;
}

inline std::string poly2_str(Poly2 p, const std::string& var = "x") {
    if (p == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg2(p); i >= 0; --i) {
        if (!((p >> i) & 1)) continue;
        if (!first) os << "+";
        if (i == 0) os << "1";
        else if (i == 1) os << var;
        else os << var << "^" << i;
        first = false;
    }
    return os.str();
}

/// Parse "x^5+x^3+1" style strings (F_2 coefficients).
inline Poly2 parse_poly2(const std::string& s, char var = 'x') {
    Poly2 r = 0;
    std::size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    skip();
    if (i == s.size()) throw std::invalid_argument("empty F_2 polynomial");
    while (i < s.size()) {
        skip();
        if (s[i] == '+') { ++i; skip(); }
        unsigned coeff = 1;
        bool consumed = false;
        if (std::isdigit((unsigned char)s[i])) {
            consumed = true;
            std::size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            coeff = std::stoul(s.substr(i, j - i)) & 1;
            i = j;
            skip();
            if (i < s.size() && s[i] == '*') { ++i; skip(); }
        }
        unsigned e = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            consumed = true;
            e = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                std::size_t j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                e = std::stoul(s.substr(i, j - i));
                i = j;
            }
        }
        if (!consumed) throw std::invalid_argument("unexpected character in: " + s);
        if (coeff) r ^= Poly2(1) << e;
        skip();
    }
    return r;
}

}  // namespace gf2x

/// Presentation of F_{2^m} as F_2[x]/(modulus); log/antilog tables.
/// Immutable after construction.
class FieldSpec {
  public:
    /// the field presentations the computations are pinned to
    static std::uint32_t default_modulus(int m) {
        static const std::uint32_t tab[] = {
            0,       0x3,     0x7,    0xB,    0x13,   0x29,    0x61,
            0x83,    0x11B,   0x211,  0x409,  0x805,  0x1053,  0x201B,
            0x4443,  0x8003,  0x1100B};
        if (m < 1 || m > 16) throw std::domain_error("field degree out of range");
        return tab[m];
    }

    static std::shared_ptr<const FieldSpec> get(int m, std::uint32_t modulus = 0,
                                                std::string letter = "") {
        if (modulus == 0) modulus = default_modulus(m);
        if (letter.empty()) letter = default_letter(m);
        return std::shared_ptr<const FieldSpec>(
            new FieldSpec(m, modulus, std::move(letter)));
    }

    int m() const { return m_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return 1u << m_; }       ///< field size
    std::uint32_t group_order() const { return order() - 1; }
    std::uint32_t generator() const { return generator_; }
    const std::string& letter() const { return letter_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % group_order()];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return exp_[(group_order() - log_[a]) % group_order()];
    }
    std::uint32_t pow(std::uint32_t a, long long e) const {
        if (a == 0) {
            if (e < 0) throw std::domain_error("inverse of zero");
            return e == 0 ? 1 : 0;
        }
        long long n = group_order();
        long long k = (long long)log_[a] * (e % n) % n;
        if (k < 0) k += n;
        return exp_[k];
    }
    std::uint32_t frobenius(std::uint32_t a) const { return mul(a, a); }
    std::uint32_t sqrt(std::uint32_t a) const {
        std::uint32_t r = a;
        for (int i = 0; i + 1 < m_; ++i) r = frobenius(r);
        return r;
    }
    /// discrete log base the spec's generator
    std::uint32_t dlog(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }
    /// multiplicative order of a nonzero element
    std::uint32_t element_order(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("order of zero");
        std::uint32_t n = group_order();
        if (n == 0) return 1;
        std::uint32_t g = std::gcd(n, log_[a] == 0 ? n : log_[a]);
        return n / g;
    }
    /// trace to F_2 (the conjugate sum always lands in the prime field)
    std::uint32_t trace(std::uint32_t a) const {
        std::uint32_t t = 0, x = a;
        for (int i = 0; i < m_; ++i) {
            t ^= x;
            x = frobenius(x);
        }
        return t;
    }
    /// one solution of z^2 + z = c, if any (the other is z + 1)
    std::int32_t solve_artin_schreier(std::uint32_t c) const {
        return as_[c];
    }

    std::vector<std::uint32_t> conjugacy_orbit(std::uint32_t a) const {
        std::vector<std::uint32_t> orbit{a};
        std::uint32_t x = frobenius(a);
        while (x != a) {
            orbit.push_back(x);
            x = frobenius(x);
        }
        return orbit;
    }
    /// degree of a over F_2 (size of its Frobenius orbit)
    int degree(std::uint32_t a) const {
        return (int)conjugacy_orbit(a).size();
    }

    /// print an element as a polynomial in the generator letter
    std::string elem_str(std::uint32_t a) const {
        return a == 0 ? "0" : gf2x::poly2_str(a, letter_);
    }
    /// parse "a^3+a+1" with this spec's letter
    std::uint32_t parse_elem(const std::string& s) const {
        gf2x::Poly2 p = gf2x::parse_poly2(s, letter_[0]);
        return (std::uint32_t)gf2x::mod2(p, modulus_);
    }

  private:
    static std::string default_letter(int m) {
        switch (m) {
            case 4: return "a";
            case 5: return "b";
            case 6: return "c";
            default: return "a";
        }
    }

    FieldSpec(int m, std::uint32_t modulus, std::string letter)
        : m_(m), modulus_(modulus), letter_(std::move(letter)) {
        if (gf2x::deg2(modulus_) != m_)
            throw std::invalid_argument("modulus degree mismatch");
        if (!gf2x::irreducible2(modulus_))
            throw std::invalid_argument("modulus not irreducible");
        const std::uint32_t n = group_order();
        log_.assign(order(), 0);
        // find a generator by exhaustive order check
        std::uint32_t g = 0;
        for (std::uint32_t cand = 2; cand < order() && g == 0; ++cand) {
            std::uint32_t x = cand;
            std::uint32_t ord = 1;
            while (x != 1) {
                x = (std::uint32_t)gf2x::mulmod2(x, cand, modulus_);
                ++ord;
            }
            if (ord == n) g = cand;
        }
        if (g == 0) g = 1;  // F_2: trivial group
        generator_ = g;
        exp_.assign(n == 0 ? 1 : n, 1);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = (std::uint32_t)gf2x::mulmod2(x, g, modulus_);
        }
        // Artin-Schreier solution table for z^2 + z = c
        as_.assign(order(), -1);
        for (std::uint32_t z = 0; z < order(); ++z) {
            std::uint32_t c = (std::uint32_t)gf2x::mulmod2(z, z, modulus_) ^ z;
            if (as_[c] < 0 || (std::uint32_t)as_[c] > z) as_[c] = (std::int32_t)z;
        }
    }

    int m_;
    std::uint32_t modulus_;
    std::string letter_;
    std::uint32_t generator_ = 1;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::int32_t> as_;
};

using FieldRef = std::shared_ptr<const FieldSpec>;

/// Element of F_{2^m} bound to its FieldSpec.
class GFElem {
  public:
    GFElem() = default;
    GFElem(FieldRef spec, std::uint32_t bits) : spec_(std::move(spec)), bits_(bits) {
        if (bits_ >= spec_->order()) throw std::invalid_argument("element out of range");
    }

    std::uint32_t bits() const { return bits_; }
    const FieldRef& spec() const { return spec_; }
    bool is_zero() const { return bits_ == 0; }

    GFElem operator+(const GFElem& o) const {
        check(o);
        return GFElem(spec_, spec_->add(bits_, o.bits_));
    }
    GFElem operator*(const GFElem& o) const {
        check(o);
        return GFElem(spec_, spec_->mul(bits_, o.bits_));
    }
    GFElem inv() const { return GFElem(spec_, spec_->inv(bits_)); }
    GFElem pow(long long e) const { return GFElem(spec_, spec_->pow(bits_, e)); }
    GFElem frobenius() const { return GFElem(spec_, spec_->frobenius(bits_)); }
    GFElem sqrt() const { return GFElem(spec_, spec_->sqrt(bits_)); }

    bool operator==(const GFElem& o) const { return bits_ == o.bits_; }

    std::string str() const { return spec_->elem_str(bits_); }

  private:
    void check(const GFElem& o) const {
        if (spec_.get() != o.spec_.get() &&
            (spec_->m() != o.spec_->m() || spec_->modulus() != o.spec_->modulus()))
            throw std::invalid_argument("mixed field specs");
    }
    FieldRef spec_;
    std::uint32_t bits_ = 0;
};

}  // namespace optcurves

#endif
