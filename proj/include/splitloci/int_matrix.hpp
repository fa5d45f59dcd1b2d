#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace splitloci {

// Unbounded integers everywhere: relation coefficients stay small, but
// elimination pivots do not.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

inline std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<Int> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

// Bareiss fraction-free elimination; exact for any square size we meet here.
inline Int determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

// U * A * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithDecomposition {
    IntMatrix u, s, v;
};

namespace detail {

inline void snf_swap_rows(IntMatrix& s, IntMatrix& u, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s(a, j), s(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
}

inline void snf_swap_cols(IntMatrix& s, IntMatrix& v, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s(i, a), s(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
}

// row a -= q * row b, mirrored into U.
inline void snf_row_op(IntMatrix& s, IntMatrix& u, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < s.cols(); ++j) s(a, j) -= q * s(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) -= q * u(b, j);
}

inline void snf_col_op(IntMatrix& s, IntMatrix& v, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < s.rows(); ++i) s(i, a) -= q * s(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) -= q * v(i, b);
}

inline Int snf_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero |entry| of the trailing submatrix, or false if it is zero.
inline bool snf_find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int mag = snf_abs(s(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithDecomposition d{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& s = d.s;
    IntMatrix& u = d.u;
    IntMatrix& v = d.v;

    const std::size_t q = m < n ? m : n;
    for (std::size_t t = 0; t < q; ++t) {
        std::size_t pi = t, pj = t;
        if (!detail::snf_find_pivot(s, t, pi, pj)) break;
        detail::snf_swap_rows(s, u, t, pi);
        detail::snf_swap_cols(s, v, t, pj);

        for (;;) {
            // Shrink the pivot column, then the pivot row.  Truncated division
            // leaves remainders strictly smaller than |pivot|, so re-picking
            // the smallest entry makes progress.
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s(i, t) == 0) continue;
                Int quo = s(i, t) / s(t, t);
                detail::snf_row_op(s, u, i, t, quo);
                if (s(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s(t, j) == 0) continue;
                Int quo = s(t, j) / s(t, t);
                detail::snf_col_op(s, v, j, t, quo);
                if (s(t, j) != 0) dirty = true;
            }
            if (dirty) {
                detail::snf_find_pivot(s, t, pi, pj);
                detail::snf_swap_rows(s, u, t, pi);
                detail::snf_swap_cols(s, v, t, pj);
                continue;
            }
            // Row and column are clear; force the pivot to divide the rest of
            // the submatrix before moving on (divisibility chain).
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        detail::snf_row_op(s, u, t, i, Int(-1));  // row t += row i
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (s(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
            for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
        }
    }
    return d;
}

}  // namespace splitloci
