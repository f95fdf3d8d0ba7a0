#ifndef OPTCURVES_SERIES_HPP
#define OPTCURVES_SERIES_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "optcurves/gf.hpp"

namespace optcurves {

/// Truncated power series over F_{2^m}: coefficients of t^0 .. t^(prec-1).
/// Everything from t^prec on is discarded.
class TruncSeries {
  public:
    TruncSeries(FieldRef field, std::size_t prec)
        : field_(std::move(field)), c_(prec, 0) {}
    TruncSeries(FieldRef field, std::vector<std::uint32_t> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {}

    static TruncSeries one(FieldRef field, std::size_t prec) {
        TruncSeries s(std::move(field), prec);
        if (prec > 0) s.c_[0] = 1;
        return s;
    }

    std::size_t prec() const { return c_.size(); }
    const FieldRef& field() const { return field_; }
    std::uint32_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t& at(std::size_t i) { return c_.at(i); }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
    }
    bool is_unit() const { return !c_.empty() && c_[0] != 0; }

    TruncSeries operator+(const TruncSeries& o) const {
        TruncSeries r(field_, std::min(prec(), o.prec()));
        for (std::size_t i = 0; i < r.prec(); ++i) r.c_[i] = c_[i] ^ o.c_[i];
        return r;
    }
    TruncSeries operator*(const TruncSeries& o) const {
        TruncSeries r(field_, std::min(prec(), o.prec()));
        for (std::size_t i = 0; i < r.prec(); ++i)
            for (std::size_t j = 0; i + j < r.prec(); ++j)
                r.c_[i + j] ^= field_->mul(c_[i], o.c_[j]);
        return r;
    }
    TruncSeries inv() const {
        if (!is_unit()) throw std::domain_error("series not invertible");
        TruncSeries r(field_, prec());
        r.c_[0] = field_->inv(c_[0]);
        for (std::size_t k = 1; k < prec(); ++k) {
            std::uint32_t s = 0;
            for (std::size_t j = 1; j <= k; ++j)
                s ^= field_->mul(c_[j], r.c_[k - j]);
            r.c_[k] = field_->mul(field_->inv(c_[0]), s);
        }
        return r;
    }
    TruncSeries pow(long long e) const {
        TruncSeries base = e < 0 ? inv() : *this;
        unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
        TruncSeries r = one(field_, prec());
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "t") const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            std::string cs = field_->elem_str(c_[i]);
            if (i == 0) os << cs;
            else {
                if (c_[i] != 1) os << "(" << cs << ")*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        if (first) os << "0";
        os << " + O(" << var << "^" << c_.size() << ")";
        return os.str();
    }

  private:
    FieldRef field_;
    std::vector<std::uint32_t> c_;
};

/// Laurent series over F_{2^m}: coefficient of t^(val+i) is coeffs[i];
/// terms of exponent >= prec are unknown. Normalized so that either the
/// leading coefficient is nonzero or the series is zero to its precision.
class LaurentSeries {
  public:
    LaurentSeries(FieldRef field, int val, std::vector<std::uint32_t> coeffs)
        : field_(std::move(field)), val_(val), c_(std::move(coeffs)) {
        normalize();
    }
    /// zero to precision prec
    LaurentSeries(FieldRef field, int prec)
        : field_(std::move(field)), val_(prec) {}

    static LaurentSeries monomial(FieldRef field, std::uint32_t coeff, int exp, int prec) {
        if (exp >= prec) return LaurentSeries(std::move(field), prec);
        std::vector<std::uint32_t> c(prec - exp, 0);
        c[0] = coeff;
        return LaurentSeries(std::move(field), exp, std::move(c));
    }

    const FieldRef& field() const { return field_; }
    int val() const {
        if (is_zero()) throw std::domain_error("valuation of zero series");
        return val_;
    }
    int prec() const { return val_ + (int)c_.size(); }
    bool is_zero() const { return c_.empty(); }
    std::uint32_t coeff(int exp) const {
        if (exp < val_ || exp >= prec()) return 0;
        return c_[exp - val_];
    }

    LaurentSeries operator+(const LaurentSeries& o) const {
        int p = std::min(prec(), o.prec());
        int v = std::min(c_.empty() ? p : val_, o.c_.empty() ? p : o.val_);
        if (v >= p) return LaurentSeries(field_, p);
        std::vector<std::uint32_t> c(p - v, 0);
        for (int e = v; e < p; ++e) c[e - v] = coeff(e) ^ o.coeff(e);
        return LaurentSeries(field_, v, std::move(c));
    }
    LaurentSeries operator*(const LaurentSeries& o) const {
        // for a zero series val_ == prec(), so these bounds cover that case too
        int v = val_ + o.val_;
        int p = std::min(val_ + o.prec(), o.val_ + prec());
        if (is_zero() || o.is_zero()) return LaurentSeries(field_, p);
        std::vector<std::uint32_t> c(p - v, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                int e = val_ + (int)i + o.val_ + (int)j;
                if (e < p) c[e - v] ^= field_->mul(c_[i], o.c_[j]);
            }
        return LaurentSeries(field_, v, std::move(c));
    }
    LaurentSeries inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero series");
        TruncSeries u(field_, c_);
        TruncSeries ui = u.inv();
        return LaurentSeries(field_, -val_, ui.coeffs());
    }
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inv(); }
    LaurentSeries pow(long long e) const {
        if (is_zero()) {
            if (e <= 0) throw std::domain_error("power of zero series");
            return LaurentSeries(field_, prec());  // conservative precision
        }
        LaurentSeries base = e < 0 ? inv() : *this;
        unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
        LaurentSeries r = monomial(field_, 1, 0, (int)c_.size());
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    /// Substitute g for the variable; g must have strictly positive valuation.
    LaurentSeries compose(const LaurentSeries& g) const {
        if (g.is_zero() || g.val() < 1)
            throw std::domain_error("composition needs positive valuation");
        int p = g.prec();
        LaurentSeries r(field_, p);
        LaurentSeries gpow = g.pow(val_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i]) r = r + monomial(field_, c_[i], 0, p) * gpow;
            gpow = gpow * g;
        }
        return r;
    }

    /// Compositional inverse: for g with val 1 return h with g(h(t)) = t + O(t^prec).
    LaurentSeries reversion() const {
        if (is_zero() || val_ != 1) throw std::domain_error("reversion needs valuation 1");
        int p = prec();
        std::uint32_t c1i = field_->inv(c_[0]);
        std::vector<std::uint32_t> h(p - 1, 0);
        h[0] = c1i;
        for (int k = 2; k < p; ++k) {
            LaurentSeries hk(field_, 1, std::vector<std::uint32_t>(h.begin(), h.end()));
            LaurentSeries comp = compose(hk);
            // discrepancy at t^k, fixed by adjusting h's t^k coefficient
            std::uint32_t d = comp.coeff(k);
            h[k - 1] = field_->mul(c1i, d);
        }
        return LaurentSeries(field_, 1, std::move(h));
    }

    /// Coefficientwise Frobenius (squares each coefficient).
    LaurentSeries frobenius_coeffs() const {
        std::vector<std::uint32_t> c(c_);
        for (auto& x : c) x = field_->frobenius(x);
        return LaurentSeries(field_, val_, std::move(c));
    }

    /// Truncate to a lower precision.
    LaurentSeries truncate(int new_prec) const {
        if (new_prec >= prec()) return *this;
        if (c_.empty() || new_prec <= val_) return LaurentSeries(field_, new_prec);
        return LaurentSeries(field_, val_,
                             std::vector<std::uint32_t>(c_.begin(), c_.begin() + (new_prec - val_)));
    }

    bool operator==(const LaurentSeries& o) const {
        return val_ == o.val_ && c_ == o.c_;
    }

    std::string str(const std::string& var = "t") const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            int e = val_ + (int)i;
            std::string cs = field_->elem_str(c_[i]);
            if (e == 0) os << cs;
            else {
                if (c_[i] != 1) os << "(" << cs << ")*";
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        if (first) os << "0";
        os << " + O(" << var << "^" << prec() << ")";
        return os.str();
    }

  private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            val_ += (int)c_.size();
            c_.clear();
        } else if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + lead);
            val_ += (int)lead;
        }
    }

    FieldRef field_;
    int val_;
    std::vector<std::uint32_t> c_;
};

}  // namespace optcurves

#endif
