#ifndef OPTCURVES_INT_MATRIX_HPP
#define OPTCURVES_INT_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "optcurves/integers.hpp"

namespace optcurves {

/// Dense matrix of arbitrary-precision integers, dimensions fixed at
/// construction.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix dims");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += x * o(k, j);
            }
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k)
            std::swap((*this)(k, i), (*this)(k, j));
    }
    /// row i -= q * row j
    void addmul_row(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < cols_; ++k)
            (*this)(i, k) -= q * (*this)(j, k);
    }
    void addmul_col(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < rows_; ++k)
            (*this)(k, i) -= q * (*this)(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(std::size_t i) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Exact determinant of a square matrix (fraction-free Bareiss).
inline Int det(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sgn > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above a pivot reduced to [0, pivot). Zero rows sink to the bottom.
inline IntMatrix hnf(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // eliminate below row r in column c by gcd steps
        while (true) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m(i, c) != 0 &&
                    (p == rows || abs_of(m(i, c)) < abs_of(m(p, c))))
                    p = i;
            if (p == rows) break;  // column is zero below
            if (p != r) m.swap_rows(r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                Int q = m(i, c) / m(r, c);
                m.addmul_row(i, r, q);
                if (m(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) m.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = m(i, c) / m(r, c);
            if (m(i, c) - q * m(r, c) < 0) q -= 1;
            m.addmul_row(i, r, q);
        }
        ++r;
    }
    return m;
}

struct SmithResult {
    IntMatrix d;  ///< diagonal, d_i | d_{i+1}, nonnegative
    IntMatrix u;  ///< unimodular row transform
    IntMatrix v;  ///< unimodular column transform; u*m*v == d
};

/// Smith normal form with transforms.
inline SmithResult snf(const IntMatrix& m0) {
    const std::size_t rows = m0.rows(), cols = m0.cols();
    IntMatrix a = m0;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t n = rows < cols ? rows : cols;
    for (std::size_t t = 0; t < n; ++t) {
        // find a pivot of minimal absolute value in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a(i, j) != 0 && (pi == rows || abs_of(a(i, j)) <
                                                       abs_of(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // trailing block is zero
        if (pi != t) { a.swap_rows(t, pi); u.swap_rows(t, pi); }
        if (pj != t) { a.swap_cols(t, pj); v.swap_cols(t, pj); }
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                a.addmul_row(i, t, q);
                u.addmul_row(i, t, q);
                if (a(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                a.addmul_col(j, t, q);
                v.addmul_col(j, t, q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    again = true;
                }
            }
            // ensure pivot divides the whole trailing block
            if (!again) {
                for (std::size_t i = t + 1; i < rows && !again; ++i)
                    for (std::size_t j = t + 1; j < cols && !again; ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            // fold row i into row t, then restart elimination
                            a.addmul_row(t, i, Int(-1));
                            u.addmul_row(t, i, Int(-1));
                            again = true;
                        }
            }
        }
        if (a(t, t) < 0) { a.negate_row(t); u.negate_row(t); }
    }
    return {a, u, v};
}

inline std::vector<Int> snf_diagonal(const IntMatrix& d) {
    std::vector<Int> r;
    const std::size_t n = d.rows() < d.cols() ? d.rows() : d.cols();
    for (std::size_t i = 0; i < n; ++i) r.push_back(d(i, i));
    return r;
}

}  // namespace optcurves

#endif
