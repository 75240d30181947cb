#pragma once

#include <utility>
#include <vector>

#include "zc/hadamard.hpp"
#include "zc/witt.hpp"

namespace zc {

// Element of the F1 motive ring Z[L]: an integer polynomial in the
// Lefschetz symbol L ( = the class of the affine line).
using motive_poly = int_poly;

// A torified variety is remembered only through the multiset of its torus
// component dimensions.
struct torified_variety {
    std::vector<unsigned> torus_dims;
};

// Ring morphism Z[L] -> Z, L |-> m. The F1^n point-counting measure is
// m = 1 + n; mu_2 denotes the measure with m = 2.
struct counting_measure {
    Int l_value;

    Int operator()(const motive_poly& p) const { return p.eval(l_value); }
};

// Integer polynomial in two symbols L1, L2; c[i][j] is the coefficient of
// L1^i L2^j. Target of the comultiplication.
struct bivar_poly {
    std::vector<std::vector<Int>> c;

    void trim() {
        for (auto& row : c)
            while (!row.empty() && row.back() == 0) row.pop_back();
        while (!c.empty() && c.back().empty()) c.pop_back();
    }

    bool operator==(const bivar_poly& o) const {
        bivar_poly a = *this, b = o;
        a.trim();
        b.trim();
        return a.c == b.c;
    }

    Int coeff(std::size_t i, std::size_t j) const {
        if (i >= c.size() || j >= c[i].size()) return 0;
        return c[i][j];
    }

    static bivar_poly constant(Int v) { return bivar_poly{{{std::move(v)}}}; }

    bivar_poly operator+(const bivar_poly& o) const {
        bivar_poly r = *this;
        if (r.c.size() < o.c.size()) r.c.resize(o.c.size());
        for (std::size_t i = 0; i < o.c.size(); ++i) {
            if (r.c[i].size() < o.c[i].size()) r.c[i].resize(o.c[i].size(), Int(0));
            for (std::size_t j = 0; j < o.c[i].size(); ++j) r.c[i][j] += o.c[i][j];
        }
        r.trim();
        return r;
    }

    bivar_poly operator*(const bivar_poly& o) const {
        bivar_poly r;
        if (c.empty() || o.c.empty()) return r;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c[i].size(); ++j) {
                if (c[i][j] == 0) continue;
                for (std::size_t k = 0; k < o.c.size(); ++k)
                    for (std::size_t l = 0; l < o.c[k].size(); ++l) {
                        if (o.c[k][l] == 0) continue;
                        if (r.c.size() <= i + k) r.c.resize(i + k + 1);
                        if (r.c[i + k].size() <= j + l) r.c[i + k].resize(j + l + 1, Int(0));
                        r.c[i + k][j + l] += c[i][j] * o.c[k][l];
                    }
            }
        r.trim();
        return r;
    }

    // substitute univariate polynomials for L1 and L2
    motive_poly eval(const motive_poly& x1, const motive_poly& x2) const {
        motive_poly r;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c[i].size(); ++j) {
                if (c[i][j] == 0) continue;
                motive_poly term = int_poly::constant(c[i][j]);
                for (std::size_t k = 0; k < i; ++k) term = term * x1;
                for (std::size_t k = 0; k < j; ++k) term = term * x2;
                r = r + term;
            }
        return r;
    }
};

// [X] = sum_i (L-1)^{d(i)} over the torus components.
inline motive_poly motive_of_torified(const torified_variety& x) {
    motive_poly lm1{{Int(-1), Int(1)}};  // L - 1
    motive_poly r;
    for (unsigned d : x.torus_dims) {
        motive_poly term = int_poly::one();
        for (unsigned k = 0; k < d; ++k) term = term * lm1;
        r = r + term;
    }
    return r;
}

// #X(F_{1^n}) = sum_i n^{d(i)}; equals the motive evaluated at L = 1 + n.
inline Int f1_point_count(const torified_variety& x, unsigned long n) {
    if (n == 0) throw error("f1_point_count needs n >= 1");
    Int total = 0;
    for (unsigned d : x.torus_dims) total += int_pow(Int(n), d);
    return total;
}

// exp(sum #X(F_{1^n})/n t^n); generally lands in W(Q), not W(Z).
inline witt_elem f1_zeta(const torified_variety& x, std::size_t order) {
    if (order == 0) throw error("f1_zeta needs order >= 1");
    std::vector<Rat> g(order);
    for (std::size_t n = 1; n <= order; ++n) g[n - 1] = Rat(f1_point_count(x, n));
    return ghost_inverse(ghost_vector{std::move(g)});
}

// The ring morphism Z[L] -> W(Z) with ghost component n equal to p(m^n);
// for p = L this is 1/(1 - mt).
inline witt_elem kapranov_zeta(const motive_poly& p, const counting_measure& mu,
                               std::size_t order) {
    if (order == 0) throw error("kapranov_zeta needs order >= 1");
    std::vector<Rat> g(order);
    Int mn = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        mn *= mu.l_value;
        g[n - 1] = Rat(p.eval(mn));
    }
    witt_elem r = ghost_inverse(ghost_vector{std::move(g)});
    if (!r.integral())
        throw integrality_violation("Kapranov zeta of an integral motive must be integral");
    return r;
}

// Adams operation: the ring morphism with Psi^n(L) = L^n.
inline motive_poly motive_adams(const motive_poly& p, unsigned n) {
    if (n == 0) throw error("adams index must be positive");
    return substitute_power(p, n);
}

// mu(lambda^0(p)), ..., mu(lambda^upto(p)): the coefficients of the
// ghost-inverse of (mu(Psi^1 p), mu(Psi^2 p), ...).
inline std::vector<Int> motive_lambda(const motive_poly& p, std::size_t upto,
                                      const counting_measure& mu) {
    witt_elem z = upto == 0 ? witt_elem::zero(0) : kapranov_zeta(p, mu, upto);
    std::vector<Int> r(upto + 1);
    for (std::size_t i = 0; i <= upto; ++i) r[i] = to_int(z.series().coeff(i));
    return r;
}

// Comultiplication: the ring morphism with Delta(L) = L1 + L2 - 2, which
// makes D = L - 2 primitive.
inline bivar_poly motive_delta(const motive_poly& p) {
    bivar_poly image{{{Int(-2), Int(1)}, {Int(1)}}};  // L1 + L2 - 2
    bivar_poly r;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        r = r * image + bivar_poly::constant(*it);
    return r;
}

// Counit: evaluation at L = 2.
inline Int motive_counit(const motive_poly& p) { return p.eval(Int(2)); }

// The biring morphism Z[L] -> H(Z) with L |-> 2*1 + c*d, i.e. term n of the
// image of p is p(2 + c(n-1)); c = 1 gives c_{mu_2}.
inline lin_rec_seq c_morphism(const motive_poly& p, const Int& c, std::size_t count) {
    std::size_t deg = static_cast<std::size_t>(std::max(p.degree(), 0));
    std::size_t n = std::max(count, 2 * (deg + 1) + 4);
    std::vector<Int> t(n);
    for (std::size_t i = 1; i <= n; ++i) t[i - 1] = p.eval(Int(2) + c * Int(i - 1));
    return lin_rec_seq::from_terms(t);
}

}  // namespace zc
