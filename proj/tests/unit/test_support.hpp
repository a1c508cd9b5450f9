#pragma once

#include "monogen/polynomial.hpp"

#include "oracles.hpp"

#include <random>

namespace testing_support {

inline monogen::IntPoly random_poly(std::mt19937_64& rng, unsigned degree, long bound, bool monic)
{
    std::vector<monogen::Integer> c(degree + 1);
    for (auto& x : c)
        x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    if (monic)
        c[degree] = 1;
    else if (c[degree] == 0)
        c[degree] = 1;
    return monogen::IntPoly(c);
}

inline oracle::Coeffs coeffs(const monogen::IntPoly& f)
{
    return oracle::Coeffs(f.coefficients().begin(), f.coefficients().end());
}

} // namespace testing_support
