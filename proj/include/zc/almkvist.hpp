#pragma once

#include <optional>
#include <utility>

#include "zc/hadamard.hpp"
#include "zc/matrix.hpp"
#include "zc/recurrence.hpp"
#include "zc/witt.hpp"

namespace zc {

// Element of Almkvist's ring W0(Z) of virtual pairs (free module,
// endomorphism) modulo pairs with zero endomorphism. Classes are stored by
// their complete invariant: the image under L, a reduced rational function
// num/den with integer coefficients and num(0) = den(0) = 1.
class w0_elem {
  public:
    // [E, f] |-> 1/det(1 - t M_f). Nilpotent parts drop out of the
    // canonical form, which is exactly the quotient by (E, 0).
    static w0_elem from_matrix(const int_matrix& m) {
        if (!m.square()) throw error("W0 class needs a square matrix");
        return from_fraction(int_poly::one(), rev_char_poly(m));
    }

    static w0_elem from_fraction(const int_poly& num, const int_poly& den) {
        if (num.coeff(0) != 1 || den.coeff(0) != 1)
            throw error("W0 fractions need constant term 1 in both polynomials");
        rat_poly p = to_rat(num), q = to_rat(den);
        rat_poly g = gcd(p, q);
        if (g.degree() > 0) {
            p = exact_div(p, g);
            q = exact_div(q, g);
            p = p * (Rat(1) / p.coeff(0));
            q = q * (Rat(1) / q.coeff(0));
        }
        if (!is_integral(p) || !is_integral(q))
            throw integrality_violation("reduced W0 fraction is not integral");
        w0_elem e;
        e.num_ = to_int(p);
        e.den_ = to_int(q);
        return e;
    }

    static w0_elem zero() { return from_fraction(int_poly::one(), int_poly::one()); }

    // The one-pair (Z, 1): 1/(1-t).
    static w0_elem one() { return from_fraction(int_poly::one(), int_poly{{Int(1), Int(-1)}}); }

    const int_poly& num() const { return num_; }
    const int_poly& den() const { return den_; }
    bool is_zero() const { return num_.degree() == 0 && den_.degree() == 0; }

    bool operator==(const w0_elem&) const = default;

  private:
    w0_elem() = default;
    int_poly num_ = int_poly::one();
    int_poly den_ = int_poly::one();
};

// Direct sum of pairs: the rational-function invariants multiply.
inline w0_elem w0_add(const w0_elem& a, const w0_elem& b) {
    return w0_elem::from_fraction(a.num() * b.num(), a.den() * b.den());
}

inline w0_elem w0_neg(const w0_elem& a) { return w0_elem::from_fraction(a.den(), a.num()); }

namespace detail {
// Companion matrix whose det(1 - tC) equals the given constant-term-1
// polynomial: the companion of its degree reversal.
inline int_matrix companion_of_reversed(const int_poly& q) {
    std::size_t k = q.degree() < 0 ? 0 : q.degree();
    std::vector<Int> rev(k + 1);
    for (std::size_t i = 0; i <= k; ++i) rev[i] = q.coeff(k - i);
    return companion(int_poly(std::move(rev)));
}
}  // namespace detail

// Tensor product of virtual pairs, computed bilinearly on companion-matrix
// representatives via Kronecker products.
inline w0_elem w0_mul(const w0_elem& a, const w0_elem& b) {
    // a = [A+] - [A-] with det(1 - tA+) = den_a, det(1 - tA-) = num_a
    int_matrix ap = detail::companion_of_reversed(a.den());
    int_matrix am = detail::companion_of_reversed(a.num());
    int_matrix bp = detail::companion_of_reversed(b.den());
    int_matrix bm = detail::companion_of_reversed(b.num());
    int_poly num = rev_char_poly(kronecker(ap, bm)) * rev_char_poly(kronecker(am, bp));
    int_poly den = rev_char_poly(kronecker(ap, bp)) * rev_char_poly(kronecker(am, bm));
    return w0_elem::from_fraction(num, den);
}

// L: truncated expansion of num/den; lands in W(Z).
inline witt_elem l_map(const w0_elem& a, std::size_t order) {
    trunc_series s = series_from_fraction(to_rat(a.num()), to_rat(a.den()), order);
    witt_elem w(s);
    if (!w.integral()) throw integrality_violation("L-image of a W0 class must be integral");
    return w;
}

// Tr: the trace-of-powers sequence (Tr M^n)_n of any representative,
// computed as ghost(l_map(a)) via the commuting square, returned with its
// minimal recurrence. At least `count` terms are certified.
inline lin_rec_seq tr_map(const w0_elem& a, std::size_t count) {
    if (count == 0) throw error("tr_map needs at least one term");
    std::size_t deg = static_cast<std::size_t>(std::max(a.num().degree(), 0) +
                                               std::max(a.den().degree(), 0));
    std::size_t n = std::max(count, 2 * deg + 4);
    ghost_vector g = ghost(l_map(a, n));
    return lin_rec_seq::from_terms(g.g);
}

// Rationality detection: Pade reconstruction with an integrality check on
// both polynomials; absent if f is not rational within the degree budget.
inline std::optional<w0_elem> w0_from_witt(const witt_elem& f, std::size_t max_deg) {
    auto pq = pade(f.series(), max_deg);
    if (!pq) return std::nullopt;
    if (!is_integral(pq->first) || !is_integral(pq->second)) return std::nullopt;
    return w0_elem::from_fraction(to_int(pq->first), to_int(pq->second));
}

}  // namespace zc
