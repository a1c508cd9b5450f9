#pragma once

#include "monogen/arith.hpp"
#include "monogen/dedekind.hpp"
#include "monogen/integer.hpp"
#include "monogen/newton.hpp"
#include "monogen/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monogen {

struct AnalysisConfig {
    FactorConfig factor;
    std::uint64_t seed = 1;
};

enum class Method { DiscCoprime, Dedekind, Ore };
std::string to_string(Method m);

struct PrimeLedger {
    Integer p;
    unsigned disc_exponent = 0;
    Method method = Method::DiscCoprime;
    IndexValuation nu_index;
    std::optional<SplittingType> splitting;
    std::optional<ModPoly> dedekind_witness;
};

enum class Verdict { MonogenicPoly, NotMonogenicPoly, Inconclusive };
std::string to_string(Verdict v);

// Certified: a mod-p degree pattern, an Eisenstein prime or the absence of
// rational roots in degree <= 3 proves irreducibility. Attested: nothing
// found against it, irreducibility is the caller's claim.
enum class Irreducibility { Certified, Attested };

struct IrreducibilityScreen {
    bool reducible = false;
    Irreducibility status = Irreducibility::Attested;
    std::string evidence;
};

IrreducibilityScreen screen_irreducibility(const IntPoly& f, const Integer& disc, const FactorConfig& config = {});

struct FieldDiscriminant {
    bool exact = false;
    Integer value{0};
    std::vector<Integer> unresolved;
};

struct MonogenityReport {
    IntPoly f;
    Integer disc;
    Factorization disc_factors;
    IrreducibilityScreen irreducibility;
    std::vector<PrimeLedger> ledger;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Integer> witnesses;        // primes dividing ind(f)
    std::vector<std::string> reasons;      // why the verdict is inconclusive
    std::vector<Integer> unresolved;       // primes/cofactors left open
    std::optional<Integer> index;          // ind(f) when every prime is exact
    FieldDiscriminant field_disc;
    std::vector<Integer> common_index_divisors;
    std::vector<std::string> notes;

    const PrimeLedger* find(const Integer& p) const;
    // nu_p(ind f) for a resolved prime; 0 for primes outside the ledger.
    std::optional<std::int64_t> exact_valuation(const Integer& p) const;
};

// Throws InputError for non-monic, degree < 2 or detectably reducible f.
MonogenityReport analyze(const IntPoly& f, const AnalysisConfig& config = {});

FieldDiscriminant field_discriminant(const MonogenityReport& report);

// Number of monic irreducible polynomials of degree d over F_p.
Integer count_irreducibles(const Integer& p, unsigned d);

// True when the splitting needs more distinct monic irreducibles of some
// residue degree than F_p has, so p divides the index of every generator.
bool common_index_divisor(const SplittingType& splitting, const Integer& p, unsigned n);

} // namespace monogen
