#pragma once

#include "monogen/integer.hpp"

#include <cstdint>
#include <vector>

namespace monogen {

struct FactorConfig {
    std::uint64_t trial_limit = 1'000'000;
    // Iteration budget per Pollard-rho attempt; several attempts are made
    // with different polynomial constants before giving up on a composite.
    std::uint64_t rho_iterations = 200'000;
    std::uint64_t seed = 1;
};

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// |value| = prod(prime^exponent) * cofactor. The cofactor is 1 or an
// unfactored composite with no prime factor below the trial-division limit.
struct Factorization {
    Integer value;
    std::vector<PrimePower> factors;
    Integer cofactor{1};

    bool complete() const { return cofactor == 1; }
    Integer reconstruct_abs() const;
    unsigned exponent_of(const Integer& p) const;
};

bool is_prime(const Integer& n);

// Primes up to `limit` by a sieve of Eratosthenes.
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

Factorization factorize(const Integer& n, const FactorConfig& config = {});

// Largest k with p^k | n. Throws DomainError for n == 0.
unsigned valuation(const Integer& n, const Integer& p);

enum class SquarefreeKind { Squarefree, NotSquarefree, Unknown };

struct SquarefreeStatus {
    SquarefreeKind kind = SquarefreeKind::Unknown;
    // For NotSquarefree: w > 1 with w^2 | n (a prime whenever one is known).
    Integer witness{0};
};

SquarefreeStatus squarefree_status(const Integer& n, const FactorConfig& config = {});

// Positive divisors of a fully factored integer, ascending.
std::vector<Integer> divisors(const Factorization& fac);

// Product of the distinct primes dividing n (n must factor completely).
Integer squarefree_kernel(const Integer& n, const FactorConfig& config = {});

} // namespace monogen
