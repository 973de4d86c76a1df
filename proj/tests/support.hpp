#pragma once

#include <random>

#include "oort/algebra.hpp"

namespace testing_support {

inline oort::Poly random_poly(std::mt19937& rng, const oort::GaloisField& F, int max_degree)
{
    std::uniform_int_distribution<std::uint32_t> coef(0, F.q() - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<std::uint32_t> c(d + 1);
    for (auto& x : c)
        x = coef(rng);
    return oort::Poly(F, c);
}

/// Random non-constant rational function.
inline oort::RatFunc random_ratfunc(std::mt19937& rng, const oort::GaloisField& F, int max_degree)
{
    while (true) {
        oort::Poly n = random_poly(rng, F, max_degree);
        oort::Poly d = random_poly(rng, F, max_degree);
        if (n.is_zero() || d.is_zero())
            continue;
        oort::RatFunc f(n, d);
        if (f.num().degree() > 0 || f.den().degree() > 0)
            return f;
    }
}

}  // namespace testing_support
