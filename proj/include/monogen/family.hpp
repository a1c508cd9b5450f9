#pragma once

#include "monogen/arith.hpp"
#include "monogen/monogenity.hpp"
#include "monogen/polynomial.hpp"

#include <string>
#include <variant>

namespace monogen {

// x^n - m with n = 2^k 3^l (k, l >= 1) and m squarefree.
struct BinomialFamily {
    unsigned n = 12;
    Integer m;
};

// x^n + A x^m + B with m a proper divisor of n.
struct JonesWhiteFamily {
    unsigned n = 0;
    unsigned m = 0;
    Integer a;
    Integer b;
};

// x^n - x - 1.
struct XnMinusXMinusOneFamily {
    unsigned n = 0;
};

using FamilyInstance = std::variant<BinomialFamily, JonesWhiteFamily, XnMinusXMinusOneFamily>;

enum class OracleVerdict { Monogenic, NotMonogenic, NotApplicable };
std::string to_string(OracleVerdict v);

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::NotApplicable;
    // NotMonogenic refers to the field (binomial family) or the polynomial.
    bool field_level = false;
    std::string reason;
};

IntPoly family_polynomial(const FamilyInstance& instance);
std::string family_label(const FamilyInstance& instance);

OracleResult family_oracle(const FamilyInstance& instance, const FactorConfig& config = {});

// Monogenic must meet MonogenicPoly; NotMonogenic (polynomial or field)
// must meet NotMonogenicPoly; NotApplicable agrees with anything.
bool oracle_agrees(const OracleResult& oracle, Verdict verdict);

// |D(x^n - x - 1)| = n^n + (-1)^n (n-1)^(n-1).
Integer xn_minus_x_minus_one_abs_disc(unsigned n);

} // namespace monogen
