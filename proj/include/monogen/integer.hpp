#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monogen {

using Integer = mpz_class;

// Bad user input: malformed polynomials, composite "primes", wrong degrees.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed (zero valuation argument, non-monic
// polynomial where one is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline bool fits_u64(const Integer& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& n) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    return mpz_get_ui(n.get_mpz_t());
}

inline Integer from_u64(std::uint64_t v) {
    Integer r;
    mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

inline Integer from_i64(std::int64_t v) {
    Integer r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divisible(const Integer& n, const Integer& d) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

} // namespace monogen
