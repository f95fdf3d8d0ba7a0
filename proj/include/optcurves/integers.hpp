#ifndef OPTCURVES_INTEGERS_HPP
#define OPTCURVES_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace optcurves {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int abs_of(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
    a = abs_of(a);
    b = abs_of(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int pow_int(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

/// Moebius function; n = 0 is a domain error.
inline int moebius(unsigned long n) {
    if (n == 0) throw std::domain_error("moebius(0)");
    int r = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

inline std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

}  // namespace optcurves

#endif
