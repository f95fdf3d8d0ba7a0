#ifndef OPTCURVES_INT_POLY_HPP
#define OPTCURVES_INT_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "optcurves/int_matrix.hpp"
#include "optcurves/integers.hpp"

namespace optcurves {

/// Dense integer polynomial, coefficient of degree i at index i.
/// Invariant: no trailing zero; the zero polynomial has an empty vector.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> lowest_first) : c_(lowest_first) {
        normalize();
    }
    explicit IntPoly(std::vector<Int> lowest_first) : c_(std::move(lowest_first)) {
        normalize();
    }
    explicit IntPoly(const Int& constant) {
        if (constant != 0) c_.push_back(constant);
    }

    static IntPoly monomial(const Int& coeff, std::size_t deg) {
        if (coeff == 0) return {};
        std::vector<Int> v(deg + 1, Int(0));
        v[deg] = coeff;
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// degree; -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& lc() const {
        static const Int zero = 0;
        return c_.empty() ? zero : c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const Int& operator[](std::size_t i) const {
        static const Int zero = 0;
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    auto operator<=>(const IntPoly& o) const { return c_ <=> o.c_; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
        return IntPoly(std::move(v));
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] += c_[i] * o.c_[j];
        return IntPoly(std::move(v));
    }
    IntPoly operator*(const Int& k) const {
        IntPoly r = *this;
        for (auto& x : r.c_) x *= k;
        r.normalize();
        return r;
    }

    Int eval(const Int& x) const {
        Int r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Int> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
        return IntPoly(std::move(v));
    }

    /// gcd of coefficients, 0 for the zero polynomial
    Int content() const {
        Int g = 0;
        for (const auto& x : c_) g = gcd_int(g, x);
        return g;
    }
    /// content removed, sign of leading coefficient kept
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        Int g = content();
        IntPoly r = *this;
        for (auto& x : r.c_) x /= g;
        return r;
    }

    /// quotient if the division is exact over Z
    std::optional<IntPoly> divide_exact(const IntPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        if (is_zero()) return IntPoly{};
        if (degree() < d.degree()) return std::nullopt;
        std::vector<Int> rem = c_;
        std::vector<Int> q(degree() - d.degree() + 1, Int(0));
        for (int i = degree() - d.degree(); i >= 0; --i) {
            Int top = rem[i + d.degree()];
            if (top == 0) continue;
            if (top % d.lc() != 0) return std::nullopt;
            Int f = top / d.lc();
            q[i] = f;
            for (int j = 0; j <= d.degree(); ++j)
                rem[i + j] -= f * d.c_[j];
        }
        for (const auto& x : rem)
            if (x != 0) return std::nullopt;
        return IntPoly(std::move(q));
    }

    std::string str(const std::string& var = "t") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

inline IntPoly operator*(const Int& k, const IntPoly& p) { return p * k; }

/// Pseudo-remainder of a by b, premultiplying a by |lc(b)|^(deg a - deg b + 1)
/// so the remainder's sign agrees with the true rational remainder's sign.
inline IntPoly pseudo_rem_signed(IntPoly a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
    int d = a.degree() - b.degree();
    if (d < 0) return a;
    Int m = pow_int(abs_of(b.lc()), unsigned(d + 1));
    a = a * m;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Int f = a.lc() / b.lc();
        a = a - IntPoly::monomial(f, a.degree() - b.degree()) * b;
    }
    return a;
}

/// Primitive gcd over Z; result primitive with positive leading coefficient
/// (up to the contents of the inputs, which are reattached by callers if
/// needed -- here we return gcd of primitive parts times gcd of contents).
inline IntPoly gcd_poly(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.lc() < 0 ? -b : b;
    if (b.is_zero()) return a.lc() < 0 ? -a : a;
    Int cont = gcd_int(a.content(), b.content());
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem_signed(a, b);
        if (!r.is_zero()) r = r.primitive_part();
        a = b;
        b = r;
    }
    if (a.lc() < 0) a = -a;
    return a * cont;
}

/// Sylvester matrix of (f, g): deg g rows of f's coefficients, then deg f
/// rows of g's, columns by descending degree.
inline IntMatrix sylvester(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("sylvester of zero polynomial");
    const int m = f.degree(), n = g.degree();
    IntMatrix s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s(i, i + j) = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s(n + i, i + j) = g[n - j];
    return s;
}

/// Resultant with the Sylvester-determinant sign convention:
/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
inline Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    if (f.degree() == 0) return pow_int(f.lc(), unsigned(g.degree()));
    if (g.degree() == 0) return pow_int(g.lc(), unsigned(f.degree()));
    return det(sylvester(f, g));
}

/// Nonnegative generator of (f, g) ∩ Z computed from the Hermite normal form
/// of the Sylvester lattice { t^i f, t^j g : i < deg g, j < deg f }.
inline Int reduced_resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("reduced_resultant of zero polynomial");
    if (f.degree() == 0 || g.degree() == 0) {
        Int c = f.degree() == 0 ? f.lc() : g.lc();
        return abs_of(c);
    }
    if (resultant(f, g) == 0)
        throw std::domain_error("reduced_resultant: inputs not coprime");
    IntMatrix h = hnf(sylvester(f, g));
    const std::size_t n = h.cols();
    return h(n - 1, n - 1);
}

/// Squarefree part f / gcd(f, f'), primitive, sign of lc preserved.
inline IntPoly radical(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("radical of zero polynomial");
    if (f.degree() == 0) return IntPoly{Int(f.lc() < 0 ? -1 : 1)};
    IntPoly g = gcd_poly(f, f.derivative());
    // exact over Q; clear the content afterwards
    IntPoly num = f * pow_int(g.lc(), unsigned(f.degree()));
    auto q = num.divide_exact(g);
    if (!q) throw std::logic_error("radical: inexact division");
    IntPoly r = q->primitive_part();
    if ((r.lc() < 0) != (f.lc() < 0)) r = -r;
    return r;
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)
inline Int discriminant(const IntPoly& f) {
    if (f.degree() < 1)
        throw std::domain_error("discriminant needs degree >= 1");
    const int n = f.degree();
    Int r = resultant(f, f.derivative());
    Int d = r / f.lc();
    return ((Int(n) * (n - 1) / 2) % 2 == 0) ? d : Int(-d);
}

// ---------------------------------------------------------------------------
// printing / parsing

inline std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = (*this)[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Int m = abs_of(a);
        if (m != 1 || i == 0) os << m.str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

/// Parse expressions like "t^2+3t+1", "(t+2)*(t-1)", "t(t+2)^2(t^2+2t-2)".
class PolyParser {
  public:
    PolyParser(std::string s, char var) : s_(std::move(s)), var_(var) {}

    IntPoly parse() {
        IntPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw std::invalid_argument("polynomial parse error: " + s_);
        return r;
    }

  private:
    IntPoly expr() {
        IntPoly r = term();
        while (true) {
            skip_ws();
            if (peek() == '+') { ++pos_; r = r + term(); }
            else if (peek() == '-') { ++pos_; r = r - term(); }
            else break;
        }
        return r;
    }
    // product of factors, with implicit multiplication
    IntPoly term() {
        IntPoly r = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') { ++pos_; r = r * factor(); }
            else if (c == '(' || c == var_) { r = r * factor(); }
            else break;
        }
        return r;
    }
    IntPoly factor() {
        IntPoly base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned e = read_uint();
            IntPoly r{Int(1)};
            for (unsigned i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
    IntPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly r = expr();
            skip_ws();
            if (peek() != ')') throw std::invalid_argument("expected )");
            ++pos_;
            return r;
        }
        if (c == '-') { ++pos_; return -atom(); }
        if (c == var_) { ++pos_; return IntPoly::monomial(1, 1); }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return IntPoly(Int(read_uint()));
        throw std::invalid_argument("polynomial parse error: " + s_);
    }
    unsigned read_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw std::invalid_argument("expected number");
        return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    std::string s_;
    char var_;
    std::size_t pos_ = 0;
};

inline IntPoly parse_poly(const std::string& s, char var = 't') {
    return PolyParser(s, var).parse();
}

}  // namespace optcurves

#endif
