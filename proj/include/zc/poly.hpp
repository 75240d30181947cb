#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zc/numeric.hpp"

namespace zc {

// Dense univariate polynomial, coefficients in ascending degree order.
// Invariant: the highest-index coefficient is nonzero unless the polynomial
// is zero (empty coefficient list).
template <typename T>
struct polynomial {
    std::vector<T> c;

    polynomial() = default;
    explicit polynomial(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static polynomial zero() { return polynomial{}; }
    static polynomial one() { return polynomial{{T(1)}}; }
    static polynomial x() { return polynomial{{T(0), T(1)}}; }
    static polynomial constant(T v) { return polynomial{{std::move(v)}}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c.size()) - 1; }

    T coeff(std::size_t i) const { return i < c.size() ? c[i] : T(0); }

    T lead() const { return c.back(); }

    bool monic() const { return !c.empty() && c.back() == 1; }

    T eval(const T& x) const {
        T r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    bool operator==(const polynomial&) const = default;

    polynomial operator+(const polynomial& o) const {
        std::vector<T> r(std::max(c.size(), o.c.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return polynomial(std::move(r));
    }

    polynomial operator-() const {
        auto r = c;
        for (auto& v : r) v = -v;
        return polynomial(std::move(r));
    }

    polynomial operator-(const polynomial& o) const { return *this + (-o); }

    polynomial operator*(const polynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<T> r(c.size() + o.c.size() - 1, T(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        return polynomial(std::move(r));
    }

    polynomial operator*(const T& s) const {
        auto r = c;
        for (auto& v : r) v *= s;
        return polynomial(std::move(r));
    }
};

using int_poly = polynomial<Int>;
using rat_poly = polynomial<Rat>;

inline rat_poly to_rat(const int_poly& p) {
    std::vector<Rat> r(p.c.begin(), p.c.end());
    return rat_poly(std::move(r));
}

inline bool is_integral(const rat_poly& p) {
    for (const auto& v : p.c)
        if (!is_integer(v)) return false;
    return true;
}

inline int_poly to_int(const rat_poly& p) {
    std::vector<Int> r;
    r.reserve(p.c.size());
    for (const auto& v : p.c) r.push_back(to_int(v));
    return int_poly(std::move(r));
}

// Euclidean division over the rationals.
inline std::pair<rat_poly, rat_poly> divmod(const rat_poly& a, const rat_poly& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    rat_poly rem = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Rat f = rem.lead() / b.lead();
        int shift = rem.degree() - b.degree();
        q[shift] = f;
        std::vector<Rat> sub(shift + b.c.size(), Rat(0));
        for (std::size_t i = 0; i < b.c.size(); ++i) sub[shift + i] = b.c[i] * f;
        rem = rem - rat_poly(std::move(sub));
    }
    return {rat_poly(std::move(q)), rem};
}

// Exact quotient; throws if the division leaves a remainder.
inline rat_poly exact_div(const rat_poly& a, const rat_poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw error("inexact polynomial division");
    return q;
}

inline bool divides(const rat_poly& d, const rat_poly& a) {
    return divmod(a, d).second.is_zero();
}

// Monic gcd over Q (Euclid); gcd(0,0) = 0.
inline rat_poly gcd(rat_poly a, rat_poly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat inv = Rat(1) / a.lead();
        a = a * inv;
    }
    return a;
}

// p(x^n)
template <typename T>
polynomial<T> substitute_power(const polynomial<T>& p, unsigned n) {
    if (p.is_zero()) return polynomial<T>::zero();
    std::vector<T> r(static_cast<std::size_t>(p.degree()) * n + 1, T(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) r[i * n] = p.c[i];
    return polynomial<T>(std::move(r));
}

template <typename T>
std::string poly_str(const polynomial<T>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        T a = p.coeff(i);
        if (a == 0) continue;
        bool neg = a < 0;
        if (!out.empty())
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        T mag = neg ? T(-a) : a;
        std::string coeff_s;
        if constexpr (std::is_same_v<T, Rat>)
            coeff_s = rat_str(mag);
        else
            coeff_s = mag.str();
        if (i == 0) {
            out += coeff_s;
        } else {
            if (mag != 1) out += coeff_s + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace zc
