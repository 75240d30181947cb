#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zc/matrix.hpp"
#include "zc/series.hpp"

namespace zc {

// Minimal monic recurrence characteristic polynomial
// x^k - B_1 x^{k-1} - ... - B_k consistent with all supplied terms
// (a_n = B_1 a_{n-1} + ... + B_k a_{n-k}).
// Integer terms of a genuine H(Z) element yield integer B_i (Fatou);
// the integrality is verified, not assumed.
inline int_poly berlekamp_massey(const std::vector<Rat>& terms) {
    if (terms.empty()) throw error("berlekamp_massey needs at least one term");
    // Connection polynomial C with C[0] = 1 and
    // sum_j C[j] * terms[n-j] = 0 for every n >= L.
    std::vector<Rat> c{Rat(1)}, b{Rat(1)};
    std::size_t l = 0, m = 1;
    Rat last_discrepancy = 1;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        Rat d = terms[n];
        for (std::size_t j = 1; j <= l; ++j) d += c[j] * terms[n - j];
        if (d == 0) {
            ++m;
        } else if (2 * l <= n) {
            std::vector<Rat> t = c;
            Rat f = d / last_discrepancy;
            if (c.size() < b.size() + m) c.resize(b.size() + m, Rat(0));
            for (std::size_t j = 0; j < b.size(); ++j) c[j + m] -= f * b[j];
            l = n + 1 - l;
            b = std::move(t);
            last_discrepancy = d;
            m = 1;
        } else {
            Rat f = d / last_discrepancy;
            if (c.size() < b.size() + m) c.resize(b.size() + m, Rat(0));
            for (std::size_t j = 0; j < b.size(); ++j) c[j + m] -= f * b[j];
            ++m;
        }
    }
    // charpoly = x^L + C[1] x^{L-1} + ... + C[L]
    std::vector<Rat> coeffs(l + 1, Rat(0));
    coeffs[l] = 1;
    for (std::size_t j = 1; j <= l; ++j) coeffs[l - j] = c.size() > j ? c[j] : Rat(0);
    rat_poly p(std::move(coeffs));
    if (!is_integral(p))
        throw non_integral_recurrence("minimal recurrence is not integer-monic: " +
                                      poly_str(p, "x"));
    return to_int(p);
}

// Solves A x = b over Q, Gaussian elimination with first-nonzero pivots;
// free variables are set to zero. Returns absent if inconsistent.
inline std::optional<std::vector<Rat>> solve_linear(rat_matrix a, std::vector<Rat> b) {
    std::size_t rows = a.rows, cols = a.cols;
    std::vector<std::size_t> pivot_col_of_row(rows, cols);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(row, j), a.at(piv, j));
        std::swap(b[row], b[piv]);
        Rat inv = Rat(1) / a.at(row, col);
        for (std::size_t j = col; j < cols; ++j) a.at(row, j) *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(row, j);
            b[i] -= f * b[row];
        }
        pivot_col_of_row[row] = col;
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < row; ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

// Pade reconstruction: p/q == f mod t^{order+1} with deg p, deg q <= max_deg,
// p(0) = q(0) = 1, gcd(p, q) = 1. Requires at least two guard coefficients
// beyond 2*max_deg; returns absent when no such rational function exists.
inline std::optional<std::pair<rat_poly, rat_poly>> pade(const trunc_series& f,
                                                         std::size_t max_deg) {
    if (f.c[0] != 1) throw bad_constant_term("pade needs constant term 1");
    if (2 * max_deg + 2 > f.order())
        throw insufficient_order("pade: order " + std::to_string(f.order()) +
                                 " too small for max_deg " + std::to_string(max_deg));
    std::size_t m = max_deg, n = f.order();
    // Unknowns q_1..q_m; for k = m+1..n: f_k + sum_j f_{k-j} q_j = 0.
    rat_matrix a(n - m, m);
    std::vector<Rat> rhs(n - m);
    for (std::size_t k = m + 1; k <= n; ++k) {
        for (std::size_t j = 1; j <= m; ++j) a.at(k - m - 1, j - 1) = f.c[k - j];
        rhs[k - m - 1] = -f.c[k];
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) return std::nullopt;
    std::vector<Rat> qc(m + 1, Rat(0));
    qc[0] = 1;
    for (std::size_t j = 1; j <= m; ++j) qc[j] = (*sol)[j - 1];
    rat_poly q(std::move(qc));
    trunc_series prod = f * series_from_poly(q, n);
    std::vector<Rat> pc(prod.c.begin(), prod.c.begin() + m + 1);
    rat_poly p{std::vector<Rat>(std::move(pc))};
    rat_poly g = gcd(p, q);
    if (g.degree() > 0) {
        p = exact_div(p, g);
        q = exact_div(q, g);
    }
    // renormalize constant terms to 1 after the reduction
    p = p * (Rat(1) / p.coeff(0));
    q = q * (Rat(1) / q.coeff(0));
    return std::make_pair(p, q);
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// k-th cyclotomic polynomial, by dividing x^k - 1 by the lower ones.
inline int_poly cyclotomic(unsigned long k) {
    if (k == 0) throw error("cyclotomic index must be positive");
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d <= k; ++d)
        if (k % d == 0) divisors.push_back(d);
    std::vector<rat_poly> phi(divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        unsigned long d = divisors[i];
        std::vector<Rat> xd(d + 1, Rat(0));
        xd[0] = -1;
        xd[d] = 1;
        rat_poly cur(std::move(xd));
        for (std::size_t j = 0; j < i; ++j)
            if (d % divisors[j] == 0) cur = exact_div(cur, phi[j]);
        phi[i] = std::move(cur);
    }
    return to_int(phi.back());
}

struct hankel_factorization {
    std::size_t rank;
    rat_matrix left;   // K x r
    rat_matrix right;  // r x K
};

// Rank factorization of the K x K Hankel matrix H[m][n] = a_{m+n-1}
// (1-indexed); left * right == H exactly. Pivot selection is first-nonzero
// for determinism.
inline hankel_factorization hankel_rank_factor(const std::vector<Rat>& terms, std::size_t k) {
    if (terms.size() < 2 * k - 1) throw error("hankel_rank_factor needs at least 2K-1 terms");
    rat_matrix h(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) h.at(i, j) = terms[i + j];
    // Row-reduce; pivot columns of H form the left factor, the nonzero rows
    // of the RREF form the right factor.
    rat_matrix r = h;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < k; ++col) {
        std::size_t piv = row;
        while (piv < k && r.at(piv, col) == 0) ++piv;
        if (piv == k) continue;
        for (std::size_t j = 0; j < k; ++j) std::swap(r.at(row, j), r.at(piv, j));
        Rat inv = Rat(1) / r.at(row, col);
        for (std::size_t j = 0; j < k; ++j) r.at(row, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row || r.at(i, col) == 0) continue;
            Rat f = r.at(i, col);
            for (std::size_t j = 0; j < k; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::size_t rank = pivot_cols.size();
    rat_matrix left(k, rank);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < rank; ++j) left.at(i, j) = h.at(i, pivot_cols[j]);
    rat_matrix right(rank, k);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < k; ++j) right.at(i, j) = r.at(i, j);
    return {rank, std::move(left), std::move(right)};
}

}  // namespace zc
