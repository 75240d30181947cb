#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "zc/poly.hpp"

namespace zc {

// Formal power series over Q truncated at a stated order: coefficients
// a_0..a_N. Binary operations return the min of the two orders.
struct trunc_series {
    std::vector<Rat> c;  // size order+1

    trunc_series() : c{Rat(0)} {}
    explicit trunc_series(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) throw error("truncated series needs at least a constant term");
    }
    trunc_series(std::size_t order, Rat constant) : c(order + 1, Rat(0)) { c[0] = std::move(constant); }

    std::size_t order() const { return c.size() - 1; }

    Rat coeff(std::size_t i) const { return i < c.size() ? c[i] : Rat(0); }

    bool operator==(const trunc_series&) const = default;

    trunc_series truncate(std::size_t new_order) const {
        std::vector<Rat> r(c.begin(), c.begin() + std::min(new_order + 1, c.size()));
        r.resize(new_order + 1, Rat(0));
        return trunc_series(std::move(r));
    }

    trunc_series operator+(const trunc_series& o) const {
        std::size_t n = std::min(order(), o.order());
        std::vector<Rat> r(n + 1);
        for (std::size_t i = 0; i <= n; ++i) r[i] = c[i] + o.c[i];
        return trunc_series(std::move(r));
    }

    trunc_series operator-(const trunc_series& o) const {
        std::size_t n = std::min(order(), o.order());
        std::vector<Rat> r(n + 1);
        for (std::size_t i = 0; i <= n; ++i) r[i] = c[i] - o.c[i];
        return trunc_series(std::move(r));
    }

    trunc_series operator*(const trunc_series& o) const {
        std::size_t n = std::min(order(), o.order());
        std::vector<Rat> r(n + 1, Rat(0));
        for (std::size_t i = 0; i <= n; ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += c[i] * o.c[j];
        }
        return trunc_series(std::move(r));
    }

    // 1/f for f with invertible (nonzero) constant term.
    trunc_series inverse() const {
        if (c[0] == 0) throw bad_constant_term("series inverse needs a unit constant term");
        std::size_t n = order();
        std::vector<Rat> r(n + 1, Rat(0));
        Rat inv0 = Rat(1) / c[0];
        r[0] = inv0;
        for (std::size_t k = 1; k <= n; ++k) {
            Rat s = 0;
            for (std::size_t i = 1; i <= k; ++i) s += c[i] * r[k - i];
            r[k] = -s * inv0;
        }
        return trunc_series(std::move(r));
    }

    // d/dt, order drops by one.
    trunc_series derivative() const {
        if (order() == 0) return trunc_series(0, Rat(0));
        std::vector<Rat> r(order());
        for (std::size_t i = 1; i <= order(); ++i) r[i - 1] = c[i] * Rat(i);
        return trunc_series(std::move(r));
    }

    bool is_integral() const {
        for (const auto& v : c)
            if (!is_integer(v)) return false;
        return true;
    }
};

inline trunc_series series_from_poly(const rat_poly& p, std::size_t order) {
    std::vector<Rat> r(order + 1, Rat(0));
    for (std::size_t i = 0; i <= order && i < p.c.size(); ++i) r[i] = p.c[i];
    return trunc_series(std::move(r));
}

// num/den expanded to the given order; den must have nonzero constant term.
inline trunc_series series_from_fraction(const rat_poly& num, const rat_poly& den,
                                         std::size_t order) {
    if (den.coeff(0) == 0) throw bad_constant_term("fraction expansion needs den(0) != 0");
    return series_from_poly(num, order) * series_from_poly(den, order).inverse();
}

// log f for f with constant term 1: integrate f'/f.
inline trunc_series series_log(const trunc_series& f) {
    if (f.c[0] != 1) throw bad_constant_term("series_log needs constant term 1");
    std::size_t n = f.order();
    trunc_series h = f.derivative() * f.inverse().truncate(n ? n - 1 : 0);
    std::vector<Rat> r(n + 1, Rat(0));
    for (std::size_t i = 1; i <= n; ++i) r[i] = h.coeff(i - 1) / Rat(i);
    return trunc_series(std::move(r));
}

// exp g for g with constant term 0: h' = g'h, h_0 = 1.
inline trunc_series series_exp(const trunc_series& g) {
    if (g.c[0] != 0) throw bad_constant_term("series_exp needs constant term 0");
    std::size_t n = g.order();
    std::vector<Rat> r(n + 1, Rat(0));
    r[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat s = 0;
        for (std::size_t i = 1; i <= k; ++i) s += Rat(i) * g.c[i] * r[k - i];
        r[k] = s / Rat(k);
    }
    return trunc_series(std::move(r));
}

}  // namespace zc
