#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zc/dynamics.hpp"

#include "util.hpp"

using namespace zc;
using zc::test::rand_int;

namespace {

int_poly ip(std::vector<long long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return int_poly(std::move(v));
}

fin_dyn_system identity_on(std::size_t k) {
    std::vector<std::size_t> m(k);
    for (std::size_t i = 0; i < k; ++i) m[i] = i;
    return fin_dyn_system(std::move(m));
}

fin_dyn_system cycle(std::size_t l) {
    std::vector<std::size_t> m(l);
    for (std::size_t i = 0; i < l; ++i) m[i] = (i + 1) % l;
    return fin_dyn_system(std::move(m));
}

fin_dyn_system rand_system(std::size_t k) {
    std::vector<std::size_t> m(k);
    for (std::size_t i = 0; i < k; ++i) m[i] = static_cast<std::size_t>(rand_int(0, static_cast<int>(k) - 1));
    return fin_dyn_system(std::move(m));
}

// zeta of a single l-cycle: 1/(1 - t^l)
trunc_series cycle_zeta_series(std::size_t l, std::size_t order) {
    std::vector<Rat> c(l + 1, Rat(0));
    c[0] = 1;
    c[l] = -1;
    return series_from_fraction(rat_poly::one(), rat_poly(std::move(c)), order);
}

}  // namespace

TEST_CASE("fix_count examples") {
    CHECK(fix_count(identity_on(4), 1) == 4);
    CHECK(fix_count(identity_on(4), 7) == 4);

    fin_dyn_system c3 = cycle(3);
    CHECK(fix_count(c3, 1) == 0);
    CHECK(fix_count(c3, 2) == 0);
    CHECK(fix_count(c3, 3) == 3);
    CHECK(fix_count(c3, 6) == 3);

    // the endofunction 0,1 |-> 0, 2 |-> 1: eventually everything lands on 0
    fin_dyn_system f({0, 0, 1});
    CHECK(fix_count(f, 1) == 1);
    CHECK(fix_count(f, 5) == 1);

    CHECK_THROWS_AS(fin_dyn_system({0, 5}), zc::error);
}

TEST_CASE("am_zeta examples") {
    CHECK(am_zeta(cycle(4), 12).series() == cycle_zeta_series(4, 12));
    CHECK(am_zeta(fin_dyn_system({}), 6) == witt_elem::zero(6));

    // identity on k points: 1/(1-t)^k
    for (std::size_t k = 1; k <= 3; ++k) {
        witt_elem expect = witt_elem::zero(10);
        for (std::size_t i = 0; i < k; ++i)
            expect = witt_add(expect, witt_elem::geometric(Rat(1), 10));
        CHECK(am_zeta(identity_on(k), 10) == expect);
    }
}

TEST_CASE("am_zeta of a permutation is the product over cycles") {
    // permutation with cycle type (1, 2, 3) on 6 points
    fin_dyn_system s({0, 2, 1, 4, 5, 3});
    trunc_series expect = cycle_zeta_series(1, 12) * cycle_zeta_series(2, 12) *
                          cycle_zeta_series(3, 12);
    CHECK(am_zeta(s, 12).series() == expect);
}

TEST_CASE("am_zeta of any endofunction is integral and rational") {
    for (int trial = 0; trial < 30; ++trial) {
        fin_dyn_system s = rand_system(static_cast<std::size_t>(rand_int(1, 8)));
        witt_elem z = am_zeta(s, 2 * s.size() + 6);
        CHECK(z.integral());
        // eventual fixed-point counts are periodic, so the zeta is rational
        CHECK(w0_from_witt(z, s.size() + 1).has_value());
    }
}

TEST_CASE("product systems multiply fixed-point counts") {
    for (int trial = 0; trial < 50; ++trial) {
        fin_dyn_system s = rand_system(static_cast<std::size_t>(rand_int(1, 5)));
        fin_dyn_system t = rand_system(static_cast<std::size_t>(rand_int(1, 5)));
        fin_dyn_system st = product_system(s, t);
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(fix_count(st, n) == fix_count(s, n) * fix_count(t, n));
        CHECK(am_zeta(st, 8) == witt_mul(am_zeta(s, 8), am_zeta(t, 8)));
    }
}

TEST_CASE("fixed-point counts are conjugation invariant") {
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t k = 5;
        fin_dyn_system s = rand_system(k);
        // conjugate by the cyclic shift sigma(i) = i+1 mod k
        std::vector<std::size_t> m(k);
        for (std::size_t i = 0; i < k; ++i) m[(i + 1) % k] = (s.map[i] + 1) % k;
        fin_dyn_system conj(std::move(m));
        for (std::size_t n = 1; n <= 6; ++n) CHECK(fix_count(conj, n) == fix_count(s, n));
    }
}

TEST_CASE("fixed points are additive over invariant subsets") {
    for (int trial = 0; trial < 20; ++trial) {
        fin_dyn_system s = rand_system(static_cast<std::size_t>(rand_int(1, 4)));
        fin_dyn_system t = rand_system(static_cast<std::size_t>(rand_int(1, 4)));
        // disjoint union: both parts invariant
        std::vector<std::size_t> m = s.map;
        for (std::size_t v : t.map) m.push_back(v + s.size());
        fin_dyn_system u(std::move(m));
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(fix_count(u, n) == fix_count(s, n) + fix_count(t, n));
        CHECK(am_zeta(u, 8) == witt_add(am_zeta(s, 8), am_zeta(t, 8)));
    }
}

TEST_CASE("quasi-unipotence detection") {
    CHECK(is_quasi_unipotent(int_matrix({{Int(0), Int(-1)}, {Int(1), Int(0)}})));
    CHECK(is_quasi_unipotent(int_matrix({{Int(1)}})));
    CHECK(is_quasi_unipotent(int_matrix({{Int(0)}})));
    CHECK_FALSE(is_quasi_unipotent(int_matrix({{Int(2)}})));
    // Fibonacci companion: eigenvalues are the golden ratio pair
    CHECK_FALSE(is_quasi_unipotent(int_matrix({{Int(1), Int(1)}, {Int(1), Int(0)}})));

    // companion of Phi_6 * Phi_1 = (x^2 - x + 1)(x - 1)
    int_poly p = cyclotomic(6) * cyclotomic(1);
    CHECK(is_quasi_unipotent(companion(p)));
    // companion of Phi_12 * x^2: roots of unity plus a nilpotent part
    int_poly q = cyclotomic(12) * ip({0, 0, 1});
    CHECK(is_quasi_unipotent(companion(q)));
    // mixing in a non-cyclotomic factor breaks it
    CHECK_FALSE(is_quasi_unipotent(companion(cyclotomic(4) * ip({-3, 1}))));
}

TEST_CASE("morse_smale_witt on the order-4 rotation") {
    homology_action h{{int_matrix({{Int(0), Int(-1)}, {Int(1), Int(0)}})}};
    std::vector<witt_elem> gens = morse_smale_witt(h, 8);
    REQUIRE(gens.size() == 4);

    // L of the rotation: 1/(1 + t^2), coefficients 1, 0, -1, 0, 1, ...
    std::vector<Rat> expect(9);
    for (std::size_t i = 0; i <= 8; i += 2) expect[i] = (i % 4 == 0) ? Rat(1) : Rat(-1);
    CHECK(gens[0].series() == trunc_series(std::move(expect)));

    // Psi_2: the rotation squared is -I, so 1/(1+t)^2
    rat_poly den{{Rat(1), Rat(2), Rat(1)}};
    CHECK(gens[1].series() == series_from_fraction(rat_poly::one(), den, 4));

    // all generators are integral and quasi-unipotent in degree <= 2
    for (const auto& g : gens) CHECK(g.integral());
}

TEST_CASE("morse_smale_hadamard trace sequences") {
    int_matrix rot({{Int(0), Int(-1)}, {Int(1), Int(0)}});
    int_matrix id2 = int_matrix::identity(2);
    homology_action h{{id2, rot, companion(cyclotomic(6))}};
    std::vector<lin_rec_seq> gens = morse_smale_hadamard(h, 12);
    REQUIRE(gens.size() == 3);

    CHECK(gens[0] == lin_rec_seq::constant(Int(2)));
    CHECK(gens[1].terms(8) == std::vector<Int>{Int(0), Int(-2), Int(0), Int(2), Int(0),
                                               Int(-2), Int(0), Int(2)});
    CHECK(gens[2].terms(12) == std::vector<Int>{Int(1), Int(-1), Int(-2), Int(-1), Int(1),
                                                Int(2), Int(1), Int(-1), Int(-2), Int(-1),
                                                Int(1), Int(2)});
}

TEST_CASE("quasi-unipotent invertible actions give periodic trace sequences") {
    for (std::size_t j : {1, 2, 3, 4, 5, 6, 8, 10, 12}) {
        int_matrix m = companion(cyclotomic(j));
        REQUIRE(is_quasi_unipotent(m));
        std::size_t window = 3 * j + 4;
        std::vector<Int> t = tr_map(w0_elem::from_matrix(m), window).terms(window);
        for (std::size_t n = 0; n + j < window; ++n) CHECK(t[n] == t[n + j]);
    }
}
