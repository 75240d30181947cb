#pragma once

#include <random>
#include <vector>

#include "zc/matrix.hpp"
#include "zc/poly.hpp"

// Shared generators for the property-style tests. Seeds are fixed so every
// run checks the same sample.

namespace zc::test {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline int rand_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline int_matrix rand_matrix(std::size_t dim, int lo = -3, int hi = 3) {
    int_matrix m(dim, dim);
    for (auto& v : m.a) v = rand_int(lo, hi);
    return m;
}

// random integer polynomial with constant term 1
inline int_poly rand_poly_ct1(int max_deg, int lo = -3, int hi = 3) {
    std::vector<Int> c{Int(1)};
    int deg = rand_int(0, max_deg);
    for (int i = 1; i <= deg; ++i) c.emplace_back(rand_int(lo, hi));
    return int_poly(std::move(c));
}

}  // namespace zc::test
