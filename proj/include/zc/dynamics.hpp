#pragma once

#include <utility>
#include <vector>

#include "zc/almkvist.hpp"
#include "zc/hadamard.hpp"
#include "zc/matrix.hpp"
#include "zc/recurrence.hpp"
#include "zc/witt.hpp"

namespace zc {

// Finite discrete dynamical system: an endofunction on {0, ..., size-1}.
struct fin_dyn_system {
    std::vector<std::size_t> map;

    explicit fin_dyn_system(std::vector<std::size_t> m) : map(std::move(m)) {
        for (std::size_t v : map)
            if (v >= map.size()) throw error("dynamical system map value out of range");
    }

    std::size_t size() const { return map.size(); }
};

// #Fix(f^n)
inline Int fix_count(const fin_dyn_system& s, std::size_t n) {
    if (n == 0) throw error("fix_count needs n >= 1");
    Int count = 0;
    for (std::size_t x = 0; x < s.size(); ++x) {
        std::size_t y = x;
        for (std::size_t i = 0; i < n; ++i) y = s.map[y];
        if (y == x) ++count;
    }
    return count;
}

// exp(sum #Fix(f^n)/n t^n)
inline witt_elem am_zeta(const fin_dyn_system& s, std::size_t order) {
    if (order == 0) throw error("am_zeta needs order >= 1");
    std::vector<Rat> g(order);
    for (std::size_t n = 1; n <= order; ++n) g[n - 1] = Rat(fix_count(s, n));
    return ghost_inverse(ghost_vector{std::move(g)});
}

// (M x M', (f, f')): fixed-point counts multiply.
inline fin_dyn_system product_system(const fin_dyn_system& s, const fin_dyn_system& t) {
    std::vector<std::size_t> m(s.size() * t.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
            m[i * t.size() + j] = s.map[i] * t.size() + t.map[j];
    return fin_dyn_system(std::move(m));
}

// True iff every eigenvalue is zero or a root of unity: strips x^k from the
// characteristic polynomial, then trial-divides by cyclotomics Phi_j with
// phi(j) <= remaining degree.
inline bool is_quasi_unipotent(const int_matrix& m) {
    int_poly p = char_poly(m);
    std::vector<Int> c = p.c;
    std::size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    c.erase(c.begin(), c.begin() + shift);
    rat_poly rem = to_rat(int_poly(std::move(c)));
    // phi(j) >= sqrt(j/2), so phi(j) <= d forces j <= 2d^2
    std::size_t d = rem.degree();
    for (std::size_t j = 1; j <= 2 * d * d + 1 && rem.degree() > 0; ++j) {
        if (euler_phi(j) > static_cast<unsigned long>(rem.degree())) continue;
        rat_poly phi = to_rat(cyclotomic(j));
        while (rem.degree() > 0 && divides(phi, rem)) rem = exact_div(rem, phi);
    }
    return rem.degree() == 0;
}

// Homology action of a diffeomorphism: one integer matrix per homology
// degree.
struct homology_action {
    std::vector<int_matrix> matrices;
};

// Generators of the lambda-subring W(M, f): L of each [H_k, M_k], plus the
// Adams images Psi_n for n <= 4 as a sample of the lambda-closure.
inline std::vector<witt_elem> morse_smale_witt(const homology_action& h, std::size_t order) {
    std::vector<witt_elem> gens;
    for (const auto& m : h.matrices) {
        witt_elem base = l_map(w0_elem::from_matrix(m), order);
        gens.push_back(base);
        for (std::size_t n = 2; n <= 4 && n <= order; ++n) gens.push_back(adams(base, n));
    }
    return gens;
}

// Generators of the sub-biring H(M, f): the trace sequences of the
// homology actions. Periodic when the action is quasi-unipotent and
// invertible.
inline std::vector<lin_rec_seq> morse_smale_hadamard(const homology_action& h,
                                                     std::size_t count) {
    std::vector<lin_rec_seq> gens;
    for (const auto& m : h.matrices) gens.push_back(tr_map(w0_elem::from_matrix(m), count));
    return gens;
}

}  // namespace zc
