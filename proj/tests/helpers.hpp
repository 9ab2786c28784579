#pragma once

#include "ciq/matrix.hpp"
#include "ciq/model.hpp"

#include <cstdint>
#include <random>

namespace ciq::testing {

// Seeded symmetric integer matrix with nonzero determinant; retries with
// a bumped diagonal in the (rare) singular case so the draw always lands.
inline Mat random_gram(int p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> off(-3, 3);
    std::uniform_int_distribution<int> diag(1, 5);
    Mat g(p, p);
    for (int bump = 0;; ++bump) {
        for (int i = 0; i < p; ++i) {
            g.at(i, i) = diag(rng) + bump;
            for (int j = i + 1; j < p; ++j)
                g.at(i, j) = g.at(j, i) = off(rng);
        }
        if (g.det() != 0)
            return g;
    }
}

inline CohomologyModel make_model(int n, int p, std::uint64_t seed = 0)
{
    ModelParams params;
    params.n = n;
    params.p = p;
    params.gram = seed == 0 ? Mat::identity(p) : random_gram(p, seed);
    return CohomologyModel(params);
}

}  // namespace ciq::testing
