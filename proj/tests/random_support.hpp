#pragma once

// Shared generators for the randomized property tests.

#include "virasoro/envelope.hpp"
#include "virasoro/mpoly.hpp"
#include "virasoro/rational.hpp"

#include <random>
#include <vector>

namespace virasoro::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed2013ULL);
    return engine;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rat random_rat(int num_range = 20, int den_max = 12) {
    return Rat(BigInt(uniform_int(-num_range, num_range)), BigInt(uniform_int(1, den_max)));
}

inline MPoly random_mpoly(int max_terms = 4, unsigned max_exp = 2) {
    MPoly p;
    const int terms = uniform_int(0, max_terms);
    for (int i = 0; i < terms; ++i) {
        Exponent e{static_cast<unsigned>(uniform_int(0, static_cast<int>(max_exp))),
                   static_cast<unsigned>(uniform_int(0, static_cast<int>(max_exp))),
                   static_cast<unsigned>(uniform_int(0, static_cast<int>(max_exp)))};
        p += MPoly::monomial(random_rat(), e);
    }
    return p;
}

inline Partition random_partition(int level) {
    const auto basis = pbw_basis(level);
    return basis[static_cast<std::size_t>(uniform_int(0, static_cast<int>(basis.size()) - 1))];
}

// Homogeneous element at `level` with up to `max_terms` monomials.
inline EnvElem random_homogeneous(int level, int max_terms = 3) {
    EnvElem x;
    const int terms = uniform_int(1, max_terms);
    for (int i = 0; i < terms; ++i) x.add(random_partition(level), random_rat(9, 4));
    return x;
}

inline std::vector<int> random_word(int max_len, int max_index) {
    std::vector<int> w(static_cast<std::size_t>(uniform_int(0, max_len)));
    for (auto& k : w) k = uniform_int(1, max_index);
    return w;
}

}  // namespace virasoro::testing
