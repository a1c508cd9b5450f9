#pragma once

#include "monogen/finite_field.hpp"
#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace monogen {

// Shape of one prime ideal above p: ramification index e, residue degree f.
struct PrimeIdealShape {
    unsigned e = 1;
    unsigned f = 1;
    auto operator<=>(const PrimeIdealShape&) const = default;
};

// Multiset of prime-ideal shapes, kept sorted by (e, f).
struct SplittingType {
    std::vector<PrimeIdealShape> primes;

    void canonicalize();
    // Sum of e*f; equals the field degree for a complete splitting.
    unsigned degree_sum() const;
    std::string to_string() const;
    bool operator==(const SplittingType&) const = default;
};

struct DedekindResult {
    Integer p;
    std::vector<ModFactor> factors;  // f mod p
    IntPoly m;                       // (f - prod phi_i^l_i) / p, phi_i lifted to [0, p)
    bool divides_index = false;
    std::optional<ModPoly> witness;  // a repeated phi_i dividing M mod p
    std::optional<SplittingType> splitting;
};

// Dedekind's criterion for p | ind(f), with the splitting of p read off the
// factorization of f mod p when p does not divide the index.
DedekindResult dedekind_test(const IntPoly& f, const Integer& p, std::uint64_t seed = 1);

} // namespace monogen
