#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zc/poly.hpp"

namespace zc {

template <typename T>
struct matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;  // row-major

    matrix() = default;
    matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
    matrix(std::size_t r, std::size_t c, std::vector<T> entries)
        : rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != rows * cols) throw error("matrix entry count mismatch");
    }
    explicit matrix(const std::vector<std::vector<T>>& rows_in) {
        rows = rows_in.size();
        cols = rows ? rows_in[0].size() : 0;
        for (const auto& row : rows_in) {
            if (row.size() != cols) throw error("ragged matrix rows");
            a.insert(a.end(), row.begin(), row.end());
        }
    }

    bool square() const { return rows == cols; }

    T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const matrix&) const = default;

    static matrix identity(std::size_t n) {
        matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    matrix operator*(const matrix& o) const {
        if (cols != o.rows) throw error("matrix dimension mismatch");
        matrix r(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const T& v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    matrix operator+(const matrix& o) const {
        if (rows != o.rows || cols != o.cols) throw error("matrix dimension mismatch");
        matrix r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }

    matrix operator*(const T& s) const {
        matrix r = *this;
        for (auto& v : r.a) v *= s;
        return r;
    }

    T trace() const {
        if (!square()) throw error("trace of non-square matrix");
        T t = 0;
        for (std::size_t i = 0; i < rows; ++i) t += at(i, i);
        return t;
    }

    matrix pow(unsigned long e) const {
        if (!square()) throw error("power of non-square matrix");
        matrix r = identity(rows);
        matrix b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

using int_matrix = matrix<Int>;
using rat_matrix = matrix<Rat>;

// Eigenvalue multiset of the result is the pairwise product of the inputs'.
template <typename T>
matrix<T> kronecker(const matrix<T>& x, const matrix<T>& y) {
    matrix<T> r(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            if (x.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    r.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
        }
    return r;
}

template <typename T>
matrix<T> block_diag(const matrix<T>& x, const matrix<T>& y) {
    matrix<T> r(x.rows + y.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
}

// det(xI - M), monic, by Faddeev-LeVerrier over Q.
inline int_poly char_poly(const int_matrix& m) {
    if (!m.square()) throw error("characteristic polynomial of non-square matrix");
    std::size_t n = m.rows;
    rat_matrix a(n, n);
    for (std::size_t i = 0; i < n * n; ++i) a.a[i] = Rat(m.a[i]);
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    rat_matrix mk(n, n);  // zero
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * (mk + rat_matrix::identity(n) * c[n - k + 1]);
        c[n - k] = -mk.trace() / Rat(k);
    }
    return to_int(rat_poly(std::move(c)));
}

// det(1 - t*M): the degree-reversal of char_poly with zero eigenvalues
// dropped; constant term 1.
inline int_poly rev_char_poly(const int_matrix& m) {
    int_poly p = char_poly(m);
    std::size_t n = m.rows;
    std::vector<Int> rev(n + 1, Int(0));
    for (std::size_t j = 0; j <= n; ++j) rev[j] = p.coeff(n - j);
    return int_poly(std::move(rev));
}

inline int_matrix companion(const int_poly& monic) {
    if (!monic.monic()) throw error("companion matrix needs a monic polynomial");
    std::size_t k = monic.degree();
    int_matrix c(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) c.at(i + 1, i) = 1;
    for (std::size_t i = 0; i < k; ++i) c.at(i, k - 1) = -monic.coeff(i);
    return c;
}

}  // namespace zc
