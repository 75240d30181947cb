#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zc/almkvist.hpp"
#include "zc/variety.hpp"

#include "util.hpp"

using namespace zc;
using zc::test::rand_int;

namespace {

fp_poly term_list(std::vector<std::pair<std::vector<unsigned>, std::int64_t>> terms) {
    return fp_poly{std::move(terms)};
}

affine_variety affine_space(std::int64_t p, unsigned dim) {
    return affine_variety{p, dim, {}};
}

// G_m as {xy = 1} in A^2
affine_variety gm(std::int64_t p) {
    return affine_variety{p, 2, {term_list({{{1, 1}, 1}, {{0, 0}, -1}})}};
}

// the origin in A^1
affine_variety origin(std::int64_t p) {
    return affine_variety{p, 1, {term_list({{{1}, 1}})}};
}

}  // namespace

TEST_CASE("make_field picks the lexicographically smallest irreducible modulus") {
    CHECK(finite_field(2, 1).modulus() == std::vector<std::int64_t>{0, 1});
    CHECK(finite_field(2, 2).modulus() == std::vector<std::int64_t>{1, 1, 1});
    CHECK(finite_field(3, 2).modulus() == std::vector<std::int64_t>{1, 0, 1});
    CHECK_THROWS_AS(finite_field(4, 1), not_prime);
    CHECK_THROWS_AS(finite_field(2, 40), budget_exceeded);
}

TEST_CASE("field arithmetic invariants") {
    finite_field f(3, 2);
    CHECK(f.q() == 9);
    for (std::int64_t a = 0; a < f.q(); ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        if (a != 0) {
            CHECK(f.mul(a, f.inverse(a)) == 1);
            CHECK(f.pow(a, f.q() - 1) == 1);
        }
        // Frobenius is the identity exactly on the prime field
        bool prime_field = a < 3;
        CHECK((f.frobenius(a) == a) == prime_field);
    }
}

TEST_CASE("count_points on the stated examples") {
    for (std::int64_t n = 1; n <= 4; ++n)
        CHECK(count_points(affine_space(2, 1), n) == int_pow(Int(2), n));
    CHECK(count_points(gm(3), 2) == 8);
    affine_variety circle{3, 2, {term_list({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}})}};
    CHECK(count_points(circle, 1) == 4);
}

TEST_CASE("counting is independent of the modulus") {
    // x^2 + x + 2 is the other kind of irreducible quadratic over F_3
    finite_field alt(3, 2, std::vector<std::int64_t>{2, 1, 1});
    CHECK(alt.modulus() != finite_field(3, 2).modulus());
    affine_variety g = gm(3);
    // recount G_m(F_9) with the alternative modulus by hand
    Int count = 0;
    for (std::int64_t x = 0; x < 9; ++x)
        for (std::int64_t y = 0; y < 9; ++y)
            if (alt.mul(x, y) == 1) ++count;
    CHECK(count == count_points(g, 2));
}

TEST_CASE("frobenius fixed points") {
    CHECK(frobenius_fixed_count(affine_space(2, 1), 1, 2) == 2);
    CHECK(frobenius_fixed_count(gm(3), 1, 2) == 2);
    CHECK(frobenius_fixed_count(gm(5), 2, 2) == count_points(gm(5), 2));
    CHECK_THROWS_AS(frobenius_fixed_count(gm(3), 2, 3), not_divisible);

    for (int trial = 0; trial < 10; ++trial) {
        affine_variety x{3, 1, {term_list({{{3}, 1}, {{1}, rand_int(0, 2)}, {{0}, rand_int(0, 2)}})}};
        for (std::int64_t n : {1, 2}) {
            for (std::int64_t m = n; m <= 4; m += n)
                CHECK(frobenius_fixed_count(x, n, m) == count_points(x, n));
        }
    }
}

TEST_CASE("weil zeta of the stated examples") {
    for (std::int64_t p : {2, 3, 5}) {
        CHECK(weil_zeta(affine_space(p, 1), 4) == witt_elem::geometric(Rat(p), 4));
        witt_elem zgm = weil_zeta(gm(p), 4);
        // (1-t)/(1-pt)
        rat_poly num{{Rat(1), Rat(-1)}}, den{{Rat(1), Rat(-p)}};
        CHECK(zgm.series() == series_from_fraction(num, den, 4));
    }
    CHECK(weil_zeta(origin(5), 5) == witt_elem::one(5));
}

TEST_CASE("weil zeta rationality detection predicts the next count") {
    for (std::int64_t p : {2, 3, 5}) {
        struct target {
            affine_variety x;
            std::size_t max_deg;
        };
        std::vector<target> targets{{affine_space(p, 1), 1},
                                    {affine_space(p, 2), 1},
                                    {gm(p), 1}};
        // G_m^2 needs order 6 and a degree-7 recount; only p = 2 stays enumerable
        if (p == 2) targets.push_back({product_variety(gm(p), gm(p)), 2});
        for (const auto& [x, max_deg] : targets) {
            std::size_t order = 2 * max_deg + 2;
            auto w0 = w0_from_witt(weil_zeta(x, order, 400'000'000), max_deg);
            REQUIRE(w0.has_value());
            ghost_vector g = ghost(l_map(*w0, order + 1));
            CHECK(g[order + 1] == Rat(count_points(x, order + 1, 400'000'000)));
        }
    }
}

TEST_CASE("product varieties multiply counts") {
    for (int trial = 0; trial < 10; ++trial) {
        affine_variety x{3, 1, {term_list({{{2}, 1}, {{1}, rand_int(0, 2)}, {{0}, rand_int(0, 2)}})}};
        affine_variety y{3, 1, {term_list({{{2}, rand_int(0, 2)}, {{0}, rand_int(0, 2)}})}};
        affine_variety xy = product_variety(x, y);
        for (std::int64_t n : {1, 2, 3})
            CHECK(count_points(xy, n) == count_points(x, n) * count_points(y, n));
    }
    for (std::int64_t n : {1, 2})
        CHECK(count_points(product_variety(affine_space(3, 1), affine_space(3, 1)), n) ==
              int_pow(Int(3), 2 * n));
}

TEST_CASE("complement counts are additive") {
    // A^1 - {0} over F_5
    CHECK(complement_count(affine_space(5, 1), {term_list({{{1}, 1}})}, 1) == 4);
    // X - X = 0
    affine_variety g = gm(3);
    CHECK(complement_count(g, {}, 2) == 0);

    for (int trial = 0; trial < 15; ++trial) {
        affine_variety x{3, 2, {term_list({{{2, 1}, rand_int(0, 2)}, {{0, 1}, rand_int(0, 2)}, {{0, 0}, rand_int(0, 2)}})}};
        std::vector<fp_poly> extra{term_list({{{1, 0}, 1}, {{0, 0}, rand_int(0, 2)}})};
        affine_variety sub = x;
        sub.polys.push_back(extra[0]);
        for (std::int64_t n : {1, 2, 3})
            CHECK(count_points(x, n) ==
                  complement_count(x, extra, n) + count_points(sub, n));
    }
}

TEST_CASE("budget enforcement") {
    CHECK_THROWS_AS(count_points(affine_space(5, 3), 2, 10'000), budget_exceeded);
}
