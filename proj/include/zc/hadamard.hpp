#pragma once

#include <utility>
#include <vector>

#include "zc/recurrence.hpp"

namespace zc {

// Element of the Hadamard ring H(Z): an integral linear recursive sequence
// (a_1, a_2, ...), stored in Berlekamp-Massey-minimal form as k initial
// terms plus the monic characteristic polynomial
// x^k - B_1 x^{k-1} - ... - B_k of the recurrence
// a_n = B_1 a_{n-1} + ... + B_k a_{n-k}.
class lin_rec_seq {
  public:
    // lrs_new: minimizes the presentation before storing it.
    lin_rec_seq(std::vector<Int> init, const int_poly& charpoly) {
        if (!charpoly.monic()) throw error("recurrence characteristic polynomial must be monic");
        if (static_cast<int>(init.size()) != charpoly.degree())
            throw error("initial segment length must equal recurrence order");
        std::size_t k = charpoly.degree();
        std::vector<Int> terms = unroll(init, charpoly, 2 * k + 4);
        *this = from_terms(terms);
    }

    // Minimal form of the sequence whose window the terms are. The window
    // must be long enough for Berlekamp-Massey (>= 2k+2 terms for order k).
    static lin_rec_seq from_terms(const std::vector<Int>& terms) {
        std::vector<Rat> rt(terms.begin(), terms.end());
        return from_terms(rt);
    }

    static lin_rec_seq from_terms(const std::vector<Rat>& terms) {
        int_poly cp = berlekamp_massey(terms);
        lin_rec_seq s;
        if (cp.degree() == 0) {
            // all supplied terms are zero: normalize to charpoly x, init (0)
            s.charpoly_ = int_poly::x();
            s.init_ = {Int(0)};
            return s;
        }
        s.charpoly_ = cp;
        s.init_.reserve(cp.degree());
        for (int i = 0; i < cp.degree(); ++i) s.init_.push_back(to_int(terms[i]));
        return s;
    }

    static lin_rec_seq constant(Int v) {
        if (v == 0) return from_terms(std::vector<Int>{Int(0), Int(0)});
        return lin_rec_seq({std::move(v)}, int_poly{{Int(-1), Int(1)}});
    }

    // d = (0, 1, 2, ...), the primitive element.
    static lin_rec_seq d() {
        return lin_rec_seq({Int(0), Int(1)}, int_poly{{Int(1), Int(-2), Int(1)}});
    }

    // (1, a, a^2, ...), group-like.
    static lin_rec_seq geometric(const Int& a) {
        if (a == 0) return from_terms(std::vector<Int>{Int(1), Int(0), Int(0), Int(0)});
        return lin_rec_seq({Int(1)}, int_poly{{-a, Int(1)}});
    }

    const std::vector<Int>& init() const { return init_; }
    const int_poly& charpoly() const { return charpoly_; }
    std::size_t order() const { return charpoly_.degree(); }

    bool operator==(const lin_rec_seq&) const = default;

    // First n terms (a_1..a_n).
    std::vector<Int> terms(std::size_t n) const { return unroll(init_, charpoly_, n); }

    // 1-indexed single term.
    Int term(std::size_t n) const { return terms(n).back(); }

  private:
    lin_rec_seq() = default;

    static std::vector<Int> unroll(const std::vector<Int>& init, const int_poly& cp,
                                   std::size_t n) {
        std::size_t k = cp.degree();
        std::vector<Int> t(init.begin(), init.end());
        t.resize(std::max(n, t.size()));
        for (std::size_t m = k; m < n; ++m) {
            Int v = 0;
            // B_i = -coeff(k-i)
            for (std::size_t i = 1; i <= k; ++i) v -= cp.coeff(k - i) * t[m - i];
            t[m] = v;
        }
        t.resize(n);
        return t;
    }

    std::vector<Int> init_;
    int_poly charpoly_;
};

// epsilon(a_1, a_2, ...) = a_1, the counit.
inline Int lrs_counit(const lin_rec_seq& a) { return a.term(1); }

// Termwise sum; candidate recurrence is the product of the two
// characteristic polynomials, then minimized.
inline lin_rec_seq lrs_add(const lin_rec_seq& a, const lin_rec_seq& b) {
    std::size_t cand = a.order() + b.order();
    std::size_t n = 2 * cand + 2;
    std::vector<Int> ta = a.terms(n), tb = b.terms(n), t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = ta[i] + tb[i];
    return lin_rec_seq::from_terms(t);
}

// Termwise (Hadamard) product; candidate recurrence comes from the
// Kronecker product of companion matrices, then minimized.
inline lin_rec_seq lrs_hadamard_mul(const lin_rec_seq& a, const lin_rec_seq& b) {
    std::size_t cand = a.order() * b.order();
    std::size_t n = 2 * std::max<std::size_t>(cand, 1) + 2;
    std::vector<Int> ta = a.terms(n), tb = b.terms(n), t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = ta[i] * tb[i];
    return lin_rec_seq::from_terms(t);
}

inline lin_rec_seq lrs_neg(const lin_rec_seq& a) {
    std::size_t n = 2 * std::max<std::size_t>(a.order(), 1) + 2;
    std::vector<Int> t = a.terms(n);
    for (auto& v : t) v = -v;
    return lin_rec_seq::from_terms(t);
}

// Finite-rank tensor decomposition certifying
// a_{m+n-1} = sum_i b_i(m) c_i(n) on the K x K window.
struct tensor_decomposition {
    std::vector<std::pair<lin_rec_seq, lin_rec_seq>> pairs;
    std::size_t window;
};

// Comultiplication on a finite window: Hankel rank factorization of the
// pairing (m, n) |-> a_{m+n-1}, with each factor certified as an integral
// linear recursive sequence.
inline tensor_decomposition lrs_delta(const lin_rec_seq& a, std::size_t window) {
    if (window < a.order() + 2)
        throw insufficient_order("lrs_delta window must be at least order+2");
    std::vector<Int> t = a.terms(2 * window - 1);
    std::vector<Rat> rt(t.begin(), t.end());
    hankel_factorization f = hankel_rank_factor(rt, window);
    tensor_decomposition d;
    d.window = window;
    for (std::size_t j = 0; j < f.rank; ++j) {
        std::vector<Rat> left_seq(window), right_seq(window);
        for (std::size_t i = 0; i < window; ++i) {
            left_seq[i] = f.left.at(i, j);
            right_seq[i] = f.right.at(j, i);
        }
        try {
            d.pairs.emplace_back(lin_rec_seq::from_terms(left_seq),
                                 lin_rec_seq::from_terms(right_seq));
        } catch (const non_integral_recurrence& e) {
            throw decomposition_unverified(e.what());
        } catch (const integrality_violation& e) {
            throw decomposition_unverified(e.what());
        }
    }
    // certify the window identity with the stored sequences
    for (std::size_t m = 1; m <= window; ++m)
        for (std::size_t n = 1; n <= window; ++n) {
            Rat s = 0;
            for (const auto& [b, c] : d.pairs) s += Rat(b.term(m)) * Rat(c.term(n));
            if (s != Rat(t[m + n - 2]))
                throw decomposition_unverified("tensor decomposition does not reproduce the window");
        }
    return d;
}

// a_1 = 0 and a_{m+n-1} = a_m + a_n on the window.
inline bool lrs_is_primitive(const lin_rec_seq& a, std::size_t window) {
    std::vector<Int> t = a.terms(2 * window - 1);
    if (t[0] != 0) return false;
    for (std::size_t m = 1; m <= window; ++m)
        for (std::size_t n = 1; n <= window; ++n)
            if (t[m + n - 2] != t[m - 1] + t[n - 1]) return false;
    return true;
}

// a_1 = 1 and a_{m+n-1} = a_m * a_n on the window.
inline bool lrs_is_grouplike(const lin_rec_seq& a, std::size_t window) {
    std::vector<Int> t = a.terms(2 * window - 1);
    if (t[0] != 1) return false;
    for (std::size_t m = 1; m <= window; ++m)
        for (std::size_t n = 1; n <= window; ++n)
            if (t[m + n - 2] != t[m - 1] * t[n - 1]) return false;
    return true;
}

}  // namespace zc
