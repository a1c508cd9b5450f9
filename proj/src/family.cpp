#include "monogen/family.hpp"

namespace monogen {

std::string to_string(OracleVerdict v)
{
    switch (v) {
    case OracleVerdict::Monogenic: return "Monogenic";
    case OracleVerdict::NotMonogenic: return "NotMonogenic";
    case OracleVerdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

struct PolyBuilder {
    IntPoly operator()(const BinomialFamily& b) const
    {
        return IntPoly::monomial(1, b.n) - IntPoly::constant(b.m);
    }
    IntPoly operator()(const JonesWhiteFamily& t) const
    {
        return IntPoly::monomial(1, t.n) + IntPoly::monomial(t.a, t.m) + IntPoly::constant(t.b);
    }
    IntPoly operator()(const XnMinusXMinusOneFamily& x) const
    {
        return IntPoly::monomial(1, x.n) - IntPoly::monomial(1, 1) - IntPoly::constant(1);
    }
};

struct Labeler {
    std::string operator()(const BinomialFamily& b) const
    {
        return "binomial n=" + std::to_string(b.n) + " m=" + b.m.get_str();
    }
    std::string operator()(const JonesWhiteFamily& t) const
    {
        return "jones-white n=" + std::to_string(t.n) + " m=" + std::to_string(t.m) + " A=" + t.a.get_str() +
               " B=" + t.b.get_str();
    }
    std::string operator()(const XnMinusXMinusOneFamily& x) const { return "xn-x-1 n=" + std::to_string(x.n); }
};

Integer mod_positive(const Integer& a, long m)
{
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

OracleResult not_applicable(std::string reason)
{
    return {OracleVerdict::NotApplicable, false, std::move(reason)};
}

struct Oracle {
    const FactorConfig& config;

    OracleResult operator()(const BinomialFamily& b) const
    {
        unsigned k = 0, l = 0, rest = b.n;
        while (rest % 2 == 0) {
            rest /= 2;
            ++k;
        }
        while (rest % 3 == 0) {
            rest /= 3;
            ++l;
        }
        if (rest != 1 || k == 0 || l == 0)
            return not_applicable("n must be 2^k 3^l with k, l >= 1");
        if (abs(b.m) < 2)
            return not_applicable("|m| must be at least 2");
        if (squarefree_status(b.m, config).kind != SquarefreeKind::Squarefree)
            return not_applicable("m must be squarefree");
        const Integer m4 = mod_positive(b.m, 4);
        const Integer m9 = mod_positive(b.m, 9);
        if (m4 != 1 && m9 != 1 && m9 != 8)
            return {OracleVerdict::Monogenic, false, "m != 1 mod 4 and m != +-1 mod 9"};
        if (m4 == 1)
            return {OracleVerdict::NotMonogenic, true, "m = 1 mod 4"};
        if (m9 == 1)
            return {OracleVerdict::NotMonogenic, true, "m = 1 mod 9"};
        if (k == 2)
            return {OracleVerdict::NotMonogenic, true, "k = 2 and m = -1 mod 9"};
        return not_applicable("m = -1 mod 9 with k != 2 is not covered");
    }

    OracleResult operator()(const JonesWhiteFamily& t) const
    {
        if (t.n < 2 || t.m < 1 || t.m >= t.n || t.n % t.m != 0)
            return not_applicable("m must be a proper divisor of n >= 2");
        if (t.a <= 0 || t.b <= 0)
            return not_applicable("A and B must be positive");
        const Integer g = gcd(t.a, t.b);
        if (g <= 1)
            return not_applicable("gcd(A, B) must exceed 1");
        const unsigned tt = t.n / t.m;
        const Integer kappa = squarefree_kernel(Integer(t.m), config);
        if (!divisible(g, kappa))
            return not_applicable("gcd(A, B) must be divisible by the squarefree kernel of m");
        const Integer numerator = pow(Integer(tt), tt) * pow(t.b, tt - 1) +
                                  pow(Integer(1) - Integer(tt), tt - 1) * pow(t.a, tt);
        const Integer denominator = pow(g, tt - 1);
        if (!divisible(numerator, denominator))
            return not_applicable("D is not an integer");
        const Integer d = numerator / denominator;
        if (d == 0)
            return not_applicable("D = 0");
        if (squarefree_status(t.b, config).kind != SquarefreeKind::Squarefree)
            return not_applicable("B is not squarefree");
        if (squarefree_status(d, config).kind != SquarefreeKind::Squarefree)
            return not_applicable("D = " + d.get_str() + " is not squarefree");
        return {OracleVerdict::Monogenic, false, "B and D = " + d.get_str() + " squarefree"};
    }

    OracleResult operator()(const XnMinusXMinusOneFamily& x) const
    {
        if (x.n < 2)
            return not_applicable("n must be at least 2");
        const Integer d = xn_minus_x_minus_one_abs_disc(x.n);
        switch (squarefree_status(d, config).kind) {
        case SquarefreeKind::Squarefree:
            return {OracleVerdict::Monogenic, false, "|D(f)| = " + d.get_str() + " squarefree"};
        case SquarefreeKind::NotSquarefree:
            return {OracleVerdict::NotMonogenic, false, "|D(f)| = " + d.get_str() + " not squarefree"};
        case SquarefreeKind::Unknown:
            break;
        }
        return not_applicable("squarefreeness of |D(f)| undecided");
    }
};

} // namespace

IntPoly family_polynomial(const FamilyInstance& instance)
{
    return std::visit(PolyBuilder{}, instance);
}

std::string family_label(const FamilyInstance& instance)
{
    return std::visit(Labeler{}, instance);
}

OracleResult family_oracle(const FamilyInstance& instance, const FactorConfig& config)
{
    return std::visit(Oracle{config}, instance);
}

bool oracle_agrees(const OracleResult& oracle, Verdict verdict)
{
    switch (oracle.verdict) {
    case OracleVerdict::Monogenic: return verdict == Verdict::MonogenicPoly;
    case OracleVerdict::NotMonogenic: return verdict == Verdict::NotMonogenicPoly;
    case OracleVerdict::NotApplicable: return true;
    }
    return false;
}

Integer xn_minus_x_minus_one_abs_disc(unsigned n)
{
    const Integer lead = pow(Integer(n), n);
    const Integer tail = pow(Integer(n - 1), n - 1);
    return n % 2 == 0 ? Integer(lead + tail) : Integer(lead - tail);
}

} // namespace monogen
