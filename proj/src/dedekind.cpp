#include "monogen/dedekind.hpp"

#include <algorithm>
#include <sstream>

namespace monogen {

void SplittingType::canonicalize()
{
    std::sort(primes.begin(), primes.end());
}

unsigned SplittingType::degree_sum() const
{
    unsigned s = 0;
    for (const auto& pr : primes)
        s += pr.e * pr.f;
    return s;
}

std::string SplittingType::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < primes.size(); ++i)
        os << (i ? ", " : "") << '(' << primes[i].e << ',' << primes[i].f << ')';
    os << ']';
    return os.str();
}

DedekindResult dedekind_test(const IntPoly& f, const Integer& p, std::uint64_t seed)
{
    if (!f.is_monic())
        throw DomainError("dedekind_test: polynomial must be monic");
    if (f.degree() < 1)
        throw DomainError("dedekind_test: polynomial must have positive degree");
    const std::uint64_t pw = checked_prime(p);

    DedekindResult result;
    result.p = p;
    result.factors = factor_mod_p(f, pw, seed);

    IntPoly product = IntPoly::constant(1);
    for (const auto& fac : result.factors)
        product = product * pow(fac.factor.lift(), fac.multiplicity);
    result.m = (f - product).divide_exact(p);

    const PrimeField field(pw);
    const ModPoly mbar = reduce_mod(result.m, pw);
    for (const auto& fac : result.factors) {
        if (fac.multiplicity < 2)
            continue;
        const bool divides = mbar.coeffs.empty() || ff::mod(field, mbar.coeffs, fac.factor.coeffs).empty();
        if (divides) {
            result.divides_index = true;
            result.witness = fac.factor;
            break;
        }
    }

    if (!result.divides_index) {
        SplittingType st;
        for (const auto& fac : result.factors)
            st.primes.push_back({fac.multiplicity, static_cast<unsigned>(fac.factor.degree())});
        st.canonicalize();
        result.splitting = std::move(st);
    }
    return result;
}

} // namespace monogen
