#pragma once

#include <utility>
#include <vector>

#include "zc/series.hpp"

namespace zc {

// Vector of ghost components g_1..g_N (1-indexed).
struct ghost_vector {
    std::vector<Rat> g;

    bool operator==(const ghost_vector&) const = default;

    std::size_t size() const { return g.size(); }
    // 1-indexed access
    const Rat& operator[](std::size_t n) const { return g[n - 1]; }
};

// Element of the big Witt ring: a truncated power series with constant
// term 1. The integral flag tracks membership in W(Z) as opposed to W(Q);
// zeta functions over F1 genuinely live in the latter.
class witt_elem {
  public:
    explicit witt_elem(trunc_series s) : s_(std::move(s)) {
        if (s_.c[0] != 1) throw bad_constant_term("Witt elements have constant term 1");
        integral_ = s_.is_integral();
    }

    const trunc_series& series() const { return s_; }
    std::size_t order() const { return s_.order(); }
    bool integral() const { return integral_; }

    bool operator==(const witt_elem&) const = default;

    // Witt zero: the series 1.
    static witt_elem zero(std::size_t order) { return witt_elem(trunc_series(order, Rat(1))); }

    // Witt one: 1/(1-t), ghost (1,1,1,...).
    static witt_elem one(std::size_t order) {
        std::vector<Rat> c(order + 1, Rat(1));
        return witt_elem(trunc_series(std::move(c)));
    }

    // 1/(1-at)
    static witt_elem geometric(const Rat& a, std::size_t order) {
        std::vector<Rat> c(order + 1, Rat(1));
        for (std::size_t i = 1; i <= order; ++i) c[i] = c[i - 1] * a;
        return witt_elem(trunc_series(std::move(c)));
    }

  private:
    trunc_series s_;
    bool integral_;
};

// Witt addition is ordinary multiplication of power series.
inline witt_elem witt_add(const witt_elem& a, const witt_elem& b) {
    return witt_elem(a.series() * b.series());
}

// Additive inverse: the series inverse 1/a.
inline witt_elem witt_neg(const witt_elem& a) { return witt_elem(a.series().inverse()); }

// f(t) |-> t f'(t)/f(t), components 1..order.
inline ghost_vector ghost(const witt_elem& a) {
    std::size_t n = a.order();
    if (n == 0) return ghost_vector{};
    trunc_series h = a.series().derivative() * a.series().inverse().truncate(n - 1);
    std::vector<Rat> g(n);
    for (std::size_t i = 1; i <= n; ++i) g[i - 1] = h.coeff(i - 1);
    return ghost_vector{std::move(g)};
}

// exp(sum_n g_n t^n / n); exact inverse of ghost at every truncation order.
inline witt_elem ghost_inverse(const ghost_vector& g) {
    std::size_t n = g.size();
    std::vector<Rat> l(n + 1, Rat(0));
    for (std::size_t i = 1; i <= n; ++i) l[i] = g[i] / Rat(i);
    return witt_elem(series_exp(trunc_series(std::move(l))));
}

// Witt multiplication, computed through ghost coordinates: the unique
// extension of 1/(1-at) (x) 1/(1-bt) = 1/(1-abt).
inline witt_elem witt_mul(const witt_elem& a, const witt_elem& b) {
    std::size_t n = std::min(a.order(), b.order());
    ghost_vector ga = ghost(n == a.order() ? a : witt_elem(a.series().truncate(n)));
    ghost_vector gb = ghost(n == b.order() ? b : witt_elem(b.series().truncate(n)));
    std::vector<Rat> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = ga.g[i] * gb.g[i];
    witt_elem r = ghost_inverse(ghost_vector{std::move(g)});
    if (a.integral() && b.integral() && !r.integral())
        throw integrality_violation("Witt product of integral elements came out non-integral");
    return r;
}

// Adams/Frobenius operation: ghost(adams(a, n))_m = ghost(a)_{nm}.
// Output order is floor(order/n).
inline witt_elem adams(const witt_elem& a, std::size_t n) {
    if (n == 0) throw error("adams index must be positive");
    if (a.order() < n)
        throw insufficient_order("adams: order " + std::to_string(a.order()) +
                                 " < index " + std::to_string(n));
    ghost_vector g = ghost(a);
    std::size_t m = a.order() / n;
    std::vector<Rat> h(m);
    for (std::size_t i = 1; i <= m; ++i) h[i - 1] = g[i * n];
    witt_elem r = ghost_inverse(ghost_vector{std::move(h)});
    if (a.integral() && !r.integral())
        throw integrality_violation("Adams image of an integral element came out non-integral");
    return r;
}

}  // namespace zc
