#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zc/witt.hpp"

namespace zc {

inline constexpr std::int64_t default_budget = 10'000'000;

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// F_{p^n} with elements represented as residue polynomials of degree < n,
// encoded as integers in [0, q): digit i in base p is the coefficient of
// x^i. Multiplication goes through discrete log tables built once.
class finite_field {
  public:
    finite_field(std::int64_t p, std::int64_t n, std::int64_t budget = default_budget)
        : finite_field(p, n, checked_modulus(p, n, budget), budget) {}

    // Explicit modulus constructor, used for the modulus-independence check.
    finite_field(std::int64_t p, std::int64_t n, std::vector<std::int64_t> modulus,
                 std::int64_t budget = default_budget)
        : p_(p), n_(n), modulus_(std::move(modulus)) {
        if (!is_prime(p)) throw not_prime("not a prime: " + std::to_string(p));
        if (n < 1) throw error("field extension degree must be positive");
        q_ = 1;
        for (std::int64_t i = 0; i < n; ++i) {
            q_ *= p;
            if (q_ > budget) throw budget_exceeded("field size exceeds enumeration budget");
        }
        if (static_cast<std::int64_t>(modulus_.size()) != n + 1 || modulus_.back() != 1)
            throw error("modulus must be monic of degree n");
        build_tables();
    }

    std::int64_t p() const { return p_; }
    std::int64_t n() const { return n_; }
    std::int64_t q() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    std::int64_t from_int(std::int64_t c) const { return ((c % p_) + p_) % p_; }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        std::int64_t r = 0, mult = 1;
        for (std::int64_t i = 0; i < n_; ++i) {
            r += ((a % p_ + b % p_) % p_) * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return r;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    std::int64_t pow(std::int64_t a, std::int64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
    }

    std::int64_t inverse(std::int64_t a) const {
        if (a == 0) throw error("inverse of zero field element");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    // x |-> x^p
    std::int64_t frobenius(std::int64_t a) const { return pow(a, p_); }

    // Lexicographically smallest monic irreducible of degree n over F_p,
    // ordering the coefficient tuples (c_0, ..., c_{n-1}).
    static std::vector<std::int64_t> smallest_irreducible(std::int64_t p, std::int64_t n) {
        if (!is_prime(p)) throw not_prime("not a prime: " + std::to_string(p));
        std::int64_t count = 1;
        for (std::int64_t i = 0; i < n; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::vector<std::int64_t> cand(n + 1);
            cand[n] = 1;
            std::int64_t rem = idx;
            for (std::int64_t i = 0; i < n; ++i) {  // c_0 is most significant
                std::int64_t place = 1;
                for (std::int64_t j = 0; j < n - 1 - i; ++j) place *= p;
                cand[i] = rem / place;
                rem %= place;
            }
            if (poly_irreducible(cand, p)) return cand;
        }
        throw error("no irreducible polynomial found");  // unreachable
    }

  private:
    // validate before the modulus search so an over-budget request fails fast
    static std::vector<std::int64_t> checked_modulus(std::int64_t p, std::int64_t n,
                                                     std::int64_t budget) {
        if (!is_prime(p)) throw not_prime("not a prime: " + std::to_string(p));
        if (n < 1) throw error("field extension degree must be positive");
        std::int64_t q = 1;
        for (std::int64_t i = 0; i < n; ++i) {
            q *= p;
            if (q > budget) throw budget_exceeded("field size exceeds enumeration budget");
        }
        return smallest_irreducible(p, n);
    }

    void build_tables() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, -1);
        for (std::int64_t g = 2; g < q_; ++g) {
            if (try_generator(g)) return;
        }
        if (q_ == 2 && try_generator(1)) return;  // F_2: the unit group is trivial
        throw error("no generator found");  // unreachable
    }

    bool try_generator(std::int64_t g) {
        std::fill(log_.begin(), log_.end(), -1);
        std::int64_t cur = 1;
        for (std::int64_t i = 0; i < q_ - 1; ++i) {
            if (log_[cur] != -1) return false;  // order < q-1
            exp_[i] = cur;
            log_[cur] = i;
            cur = poly_mul_mod(cur, g);
        }
        return cur == 1;
    }

    // residue-polynomial product of two encoded elements
    std::int64_t poly_mul_mod(std::int64_t a, std::int64_t b) const {
        std::vector<std::int64_t> da(n_), db(n_), prod(2 * n_ - 1, 0);
        for (std::int64_t i = 0; i < n_; ++i) {
            da[i] = a % p_;
            db[i] = b % p_;
            a /= p_;
            b /= p_;
        }
        for (std::int64_t i = 0; i < n_; ++i) {
            if (da[i] == 0) continue;
            for (std::int64_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (std::int64_t d = 2 * n_ - 2; d >= n_; --d) {
            std::int64_t f = prod[d];
            if (f == 0) continue;
            prod[d] = 0;
            for (std::int64_t i = 0; i < n_; ++i)
                prod[d - n_ + i] = ((prod[d - n_ + i] - f * modulus_[i]) % p_ + p_) % p_;
        }
        std::int64_t r = 0, mult = 1;
        for (std::int64_t i = 0; i < n_; ++i) {
            r += prod[i] * mult;
            mult *= p_;
        }
        return r;
    }

    static bool poly_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
        std::int64_t n = static_cast<std::int64_t>(f.size()) - 1;
        if (n == 1) return true;
        for (std::int64_t d = 1; 2 * d <= n; ++d) {
            std::int64_t count = 1;
            for (std::int64_t i = 0; i < d; ++i) count *= p;
            for (std::int64_t idx = 0; idx < count; ++idx) {
                std::vector<std::int64_t> div(d + 1);
                div[d] = 1;
                std::int64_t rem = idx;
                for (std::int64_t i = 0; i < d; ++i) {
                    div[i] = rem % p;
                    rem /= p;
                }
                if (poly_divides(div, f, p)) return false;
            }
        }
        return true;
    }

    static bool poly_divides(const std::vector<std::int64_t>& d,
                             const std::vector<std::int64_t>& f, std::int64_t p) {
        std::vector<std::int64_t> rem = f;
        std::int64_t dd = static_cast<std::int64_t>(d.size()) - 1;
        for (std::int64_t k = static_cast<std::int64_t>(rem.size()) - 1; k >= dd; --k) {
            std::int64_t c = rem[k] % p;
            if (c == 0) continue;
            for (std::int64_t i = 0; i <= dd; ++i)
                rem[k - dd + i] = ((rem[k - dd + i] - c * d[i]) % p + p) % p;
        }
        for (std::int64_t i = 0; i < dd; ++i)
            if (rem[i] % p != 0) return false;
        return true;
    }

    std::int64_t p_, n_, q_;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> exp_, log_;
};

// Multivariate polynomial over F_p: a list of (exponent vector, coefficient)
// pairs. Coefficients are kept reduced mod p.
struct fp_poly {
    std::vector<std::pair<std::vector<unsigned>, std::int64_t>> terms;
};

// Affine variety over F_p, cut out by the given polynomials inside A^num_vars.
struct affine_variety {
    std::int64_t p = 2;
    unsigned num_vars = 0;
    std::vector<fp_poly> polys;
};

using point_count_table = std::vector<Int>;

namespace detail {

inline std::int64_t eval_poly(const fp_poly& poly, const finite_field& f,
                              const std::vector<std::int64_t>& point) {
    std::int64_t acc = 0;
    for (const auto& [exps, coeff] : poly.terms) {
        std::int64_t v = f.from_int(coeff);
        for (std::size_t j = 0; j < exps.size() && v != 0; ++j)
            if (exps[j]) v = f.mul(v, f.pow(point[j], exps[j]));
        acc = f.add(acc, v);
    }
    return acc;
}

inline bool on_variety(const affine_variety& x, const finite_field& f,
                       const std::vector<std::int64_t>& point) {
    for (const auto& poly : x.polys)
        if (eval_poly(poly, f, point) != 0) return false;
    return true;
}

// Calls fn for every point of (F_q)^vars; aborts if q^vars exceeds budget.
template <typename Fn>
void enumerate_points(const finite_field& f, unsigned vars, std::int64_t budget, Fn&& fn) {
    std::int64_t total = 1;
    for (unsigned i = 0; i < vars; ++i) {
        if (total > budget / f.q()) throw budget_exceeded("point enumeration exceeds budget");
        total *= f.q();
    }
    std::vector<std::int64_t> point(vars, 0);
    for (std::int64_t i = 0; i < total; ++i) {
        fn(point);
        for (unsigned j = 0; j < vars; ++j) {
            if (++point[j] < f.q()) break;
            point[j] = 0;
        }
    }
}

}  // namespace detail

// Exact #X(F_{p^n}) by full enumeration.
inline Int count_points(const affine_variety& x, std::int64_t n,
                        std::int64_t budget = default_budget) {
    finite_field f(x.p, n, budget);
    Int count = 0;
    detail::enumerate_points(f, x.num_vars, budget, [&](const std::vector<std::int64_t>& pt) {
        if (detail::on_variety(x, f, pt)) ++count;
    });
    return count;
}

// Points of X over F_{p^m} fixed by the n-th Frobenius iterate
// (coordinate-wise c |-> c^{p^n}); equals count_points(x, n) when n | m.
inline Int frobenius_fixed_count(const affine_variety& x, std::int64_t n, std::int64_t m,
                                 std::int64_t budget = default_budget) {
    if (n < 1 || m % n != 0) throw not_divisible("frobenius_fixed_count needs n | m");
    finite_field f(x.p, m, budget);
    std::int64_t pn = 1;
    for (std::int64_t i = 0; i < n; ++i) pn *= x.p;
    std::vector<char> fixed(f.q());
    for (std::int64_t c = 0; c < f.q(); ++c) fixed[c] = f.pow(c, pn) == c;
    Int count = 0;
    detail::enumerate_points(f, x.num_vars, budget, [&](const std::vector<std::int64_t>& pt) {
        for (std::int64_t c : pt)
            if (!fixed[c]) return;
        if (detail::on_variety(x, f, pt)) ++count;
    });
    return count;
}

inline point_count_table count_table(const affine_variety& x, std::size_t order,
                                     std::int64_t budget = default_budget) {
    point_count_table t;
    t.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) t.push_back(count_points(x, n, budget));
    return t;
}

// exp(sum #X(F_{p^n})/n t^n)
inline witt_elem weil_zeta(const affine_variety& x, std::size_t order,
                           std::int64_t budget = default_budget) {
    point_count_table t = count_table(x, order, budget);
    std::vector<Rat> g(t.begin(), t.end());
    return ghost_inverse(ghost_vector{std::move(g)});
}

// Disjoint variable sets, union of equations; point counts multiply.
inline affine_variety product_variety(const affine_variety& x, const affine_variety& y) {
    if (x.p != y.p) throw error("product varieties must share the prime");
    affine_variety r;
    r.p = x.p;
    r.num_vars = x.num_vars + y.num_vars;
    for (const auto& poly : x.polys) {
        fp_poly q;
        for (const auto& [exps, c] : poly.terms) {
            std::vector<unsigned> e = exps;
            e.resize(r.num_vars, 0);
            q.terms.emplace_back(std::move(e), c);
        }
        r.polys.push_back(std::move(q));
    }
    for (const auto& poly : y.polys) {
        fp_poly q;
        for (const auto& [exps, c] : poly.terms) {
            std::vector<unsigned> e(x.num_vars, 0);
            e.insert(e.end(), exps.begin(), exps.end());
            e.resize(r.num_vars, 0);
            q.terms.emplace_back(std::move(e), c);
        }
        r.polys.push_back(std::move(q));
    }
    return r;
}

// Points of X violating at least one of the extra polynomials cutting out Y:
// #X = complement_count + #Y.
inline Int complement_count(const affine_variety& x, const std::vector<fp_poly>& y_extra,
                            std::int64_t n, std::int64_t budget = default_budget) {
    finite_field f(x.p, n, budget);
    Int count = 0;
    detail::enumerate_points(f, x.num_vars, budget, [&](const std::vector<std::int64_t>& pt) {
        if (!detail::on_variety(x, f, pt)) return;
        for (const auto& poly : y_extra)
            if (detail::eval_poly(poly, f, pt) != 0) {
                ++count;
                return;
            }
    });
    return count;
}

}  // namespace zc
