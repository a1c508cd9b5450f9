#pragma once

// Slow, independent reference computations used to check the library.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Coeffs = std::vector<Z>;  // ascending

// Fraction-free determinant.
Z determinant(std::vector<std::vector<Z>> m);

// |det| of the coordinates of 1, g, ..., g^(n-1) modulo the monic f in the
// basis 1, x, ..., x^(n-1): the index of Z[g(xi)] in Z[xi].
Z relative_index(const Coeffs& f, const Coeffs& g);

// p-adic valuation of ind(f) by counting the elements of (1/p^k) Z[xi]
// that are algebraic integers, k increased until the count stabilizes.
// Returns -1 if the enumeration would exceed `budget` elements.
int index_valuation_by_count(const Coeffs& f, unsigned p, std::uint64_t budget = 200000);

// Roots by Durand-Kerner iteration and the discriminant prod (r_i - r_j)^2.
std::vector<std::complex<long double>> roots(const Coeffs& f);
long double discriminant_numeric(const Coeffs& f);

// Trial division by every monic polynomial of degree <= n/2 over F_p.
bool irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

// Product of polynomials over F_p (ascending, trimmed).
std::vector<std::uint64_t> mul_mod_p(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                     std::uint64_t p);

// Plain trial-division factorization of |n| > 0 into (prime, exponent).
std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n);

} // namespace oracle
