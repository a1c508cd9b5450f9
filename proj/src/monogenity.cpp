#include "monogen/monogenity.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <stdexcept>

namespace monogen {

std::string to_string(Method m)
{
    switch (m) {
    case Method::DiscCoprime: return "DiscCoprime";
    case Method::Dedekind: return "Dedekind";
    case Method::Ore: return "Ore";
    }
    return "?";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::MonogenicPoly: return "MonogenicPoly";
    case Verdict::NotMonogenicPoly: return "NotMonogenicPoly";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const PrimeLedger* MonogenityReport::find(const Integer& p) const
{
    for (const auto& row : ledger)
        if (row.p == p)
            return &row;
    return nullptr;
}

std::optional<std::int64_t> MonogenityReport::exact_valuation(const Integer& p) const
{
    const PrimeLedger* row = find(p);
    if (!row)
        return divisible(disc, p) ? std::nullopt : std::optional<std::int64_t>(0);
    if (!row->nu_index.exact())
        return std::nullopt;
    return row->nu_index.value;
}

namespace {

constexpr std::size_t kMaxPatternDegree = 256;

bool has_integer_root(const IntPoly& f, const FactorConfig& config, bool& searched_all)
{
    searched_all = true;
    const Integer a0 = f[0];
    if (a0 == 0)
        return true;
    const Factorization fac = factorize(a0, config);
    if (!fac.complete()) {
        searched_all = false;
        return false;
    }
    for (const auto& d : divisors(fac))
        if (f.evaluate(d) == 0 || f.evaluate(-d) == 0)
            return true;
    return false;
}

bool eisenstein_at(const IntPoly& f, const Integer& p)
{
    const auto& c = f.coefficients();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!divisible(c[i], p))
            return false;
    return !divisible(c[0], p * p);
}

} // namespace

IrreducibilityScreen screen_irreducibility(const IntPoly& f, const Integer& disc, const FactorConfig& config)
{
    IrreducibilityScreen s;
    const long n = f.degree();
    if (disc == 0) {
        s.reducible = true;
        s.evidence = "zero discriminant (repeated factor)";
        return s;
    }
    bool complete = true;
    if (has_integer_root(f, config, complete)) {
        s.reducible = true;
        s.evidence = "integer root";
        return s;
    }
    if (n <= 3 && complete) {
        s.status = Irreducibility::Certified;
        s.evidence = "no rational root in degree " + std::to_string(n);
        return s;
    }

    const Factorization dfac = factorize(disc, config);
    for (const auto& pp : dfac.factors) {
        if (eisenstein_at(f, pp.prime)) {
            s.status = Irreducibility::Certified;
            s.evidence = "Eisenstein at " + pp.prime.get_str();
            return s;
        }
    }

    if (static_cast<std::size_t>(n) < kMaxPatternDegree) {
        // Achievable degrees of a rational factor, intersected over good primes.
        std::bitset<kMaxPatternDegree> possible;
        possible.set();
        int used = 0;
        for (std::uint32_t p : small_primes(2000)) {
            if (divisible(disc, Integer(p)))
                continue;
            std::bitset<kMaxPatternDegree> sums;
            sums.set(0);
            for (const auto& fac : factor_mod_p(f, p))
                for (unsigned k = 0; k < fac.multiplicity; ++k)
                    sums |= sums << static_cast<std::size_t>(fac.factor.degree());
            possible &= sums;
            ++used;
            bool only_trivial = true;
            for (long d = 1; d < n; ++d)
                if (possible.test(static_cast<std::size_t>(d)))
                    only_trivial = false;
            if (only_trivial) {
                s.status = Irreducibility::Certified;
                s.evidence = "mod-p degree patterns (" + std::to_string(used) + " primes, last p = " +
                             std::to_string(p) + ")";
                return s;
            }
            if (used >= 60)
                break;
        }
    }
    s.evidence = "no certificate found; irreducibility attested by caller";
    return s;
}

MonogenityReport analyze(const IntPoly& f, const AnalysisConfig& config)
{
    if (f.degree() < 2)
        throw InputError("analyze: polynomial must have degree at least 2");
    if (!f.is_monic())
        throw InputError("analyze: polynomial must be monic");

    MonogenityReport rep;
    rep.f = f;
    rep.disc = discriminant(f);
    rep.irreducibility = screen_irreducibility(f, rep.disc, config.factor);
    if (rep.irreducibility.reducible)
        throw InputError("analyze: polynomial is reducible (" + rep.irreducibility.evidence + ")");
    if (rep.irreducibility.status == Irreducibility::Attested)
        rep.notes.push_back("irreducibility not certified by the screen; taken as attested");

    rep.disc_factors = factorize(rep.disc, config.factor);
    const unsigned n = static_cast<unsigned>(f.degree());

    for (const auto& pp : rep.disc_factors.factors) {
        PrimeLedger row;
        row.p = pp.prime;
        row.disc_exponent = pp.exponent;
        const bool machine_prime = pp.prime < pow(Integer(2), 63);
        if (pp.exponent == 1) {
            row.method = Method::DiscCoprime;
            row.nu_index = {IndexValuation::Kind::Exact, 0};
            if (machine_prime) {
                SplittingType st;
                for (const auto& fac : factor_mod_p(f, to_u64(pp.prime), config.seed))
                    st.primes.push_back({fac.multiplicity, static_cast<unsigned>(fac.factor.degree())});
                st.canonicalize();
                row.splitting = std::move(st);
            }
            rep.ledger.push_back(std::move(row));
            continue;
        }
        if (!machine_prime) {
            rep.unresolved.push_back(pp.prime);
            rep.reasons.push_back("prime " + pp.prime.get_str() + " with p^2 | D(f) exceeds the supported range");
            continue;
        }
        const DedekindResult ded = dedekind_test(f, pp.prime, config.seed);
        if (!ded.divides_index) {
            row.method = Method::Dedekind;
            row.nu_index = {IndexValuation::Kind::Exact, 0};
            row.splitting = ded.splitting;
        } else {
            row.method = Method::Ore;
            row.dedekind_witness = ded.witness;
            const OreAnalysis ore = ore_analysis(f, pp.prime, config.seed);
            row.nu_index = ore.verdict;
            if (ore.verdict.value < 1)
                throw std::logic_error("analyze: Dedekind and Ore disagree at p = " + pp.prime.get_str());
            if (ore.regular())
                row.splitting = ore_factorization(ore);
        }
        if (row.splitting && row.splitting->degree_sum() != n)
            throw std::logic_error("analyze: splitting type does not sum to the degree");
        rep.ledger.push_back(std::move(row));
    }

    if (!rep.disc_factors.complete()) {
        const Integer& c = rep.disc_factors.cofactor;
        const SquarefreeStatus st = squarefree_status(c, config.factor);
        if (st.kind == SquarefreeKind::Squarefree) {
            rep.notes.push_back("discriminant cofactor " + c.get_str() +
                                " verified squarefree; its primes cannot divide the index");
        } else {
            rep.unresolved.push_back(c);
            rep.reasons.push_back("unfactored discriminant cofactor " + c.get_str() + " not verified squarefree");
        }
    }

    bool all_exact = rep.unresolved.empty();
    for (const auto& row : rep.ledger) {
        if (row.nu_index.value >= 1)
            rep.witnesses.push_back(row.p);
        if (!row.nu_index.exact()) {
            all_exact = false;
            if (row.nu_index.value == 0) {
                rep.reasons.push_back("p = " + row.p.get_str() + " is not regular and its bound is 0");
                rep.unresolved.push_back(row.p);
            }
        }
    }

    if (!rep.witnesses.empty())
        rep.verdict = Verdict::NotMonogenicPoly;
    else if (!rep.reasons.empty())
        rep.verdict = Verdict::Inconclusive;
    else
        rep.verdict = Verdict::MonogenicPoly;

    if (all_exact) {
        Integer index = 1;
        for (const auto& row : rep.ledger)
            index *= pow(row.p, static_cast<unsigned long>(row.nu_index.value));
        rep.index = index;
    }
    for (const auto& row : rep.ledger)
        if (!row.nu_index.exact())
            rep.notes.push_back("p = " + row.p.get_str() + " is not regular: valuation is a lower bound");

    for (const auto& row : rep.ledger) {
        if (row.splitting && common_index_divisor(*row.splitting, row.p, n))
            rep.common_index_divisors.push_back(row.p);
    }
    if (!rep.common_index_divisors.empty())
        rep.notes.push_back("common index divisor found: the field itself is not monogenic");

    rep.field_disc = field_discriminant(rep);
    return rep;
}

FieldDiscriminant field_discriminant(const MonogenityReport& report)
{
    FieldDiscriminant fd;
    fd.unresolved = report.unresolved;
    for (const auto& row : report.ledger)
        if (!row.nu_index.exact() && std::find(fd.unresolved.begin(), fd.unresolved.end(), row.p) == fd.unresolved.end())
            fd.unresolved.push_back(row.p);
    if (!fd.unresolved.empty() || !report.index)
        return fd;
    const Integer square = *report.index * *report.index;
    if (!divisible(report.disc, square))
        throw std::logic_error("field_discriminant: ind(f)^2 does not divide D(f)");
    fd.exact = true;
    fd.value = report.disc / square;
    return fd;
}

namespace {

int mobius(unsigned n)
{
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

} // namespace

Integer count_irreducibles(const Integer& p, unsigned d)
{
    if (d == 0)
        throw DomainError("count_irreducibles: degree must be positive");
    Integer total = 0;
    for (unsigned e = 1; e <= d; ++e)
        if (d % e == 0)
            total += mobius(d / e) * pow(p, e);
    return total / d;
}

bool common_index_divisor(const SplittingType& splitting, const Integer& p, unsigned n)
{
    if (splitting.degree_sum() != n)
        throw DomainError("common_index_divisor: splitting type is not a certified splitting of degree " +
                          std::to_string(n));
    std::map<unsigned, unsigned> by_degree;
    for (const auto& pr : splitting.primes)
        ++by_degree[pr.f];
    bool obstructed = false;
    for (const auto& [f, count] : by_degree)
        if (Integer(count) > count_irreducibles(p, f))
            obstructed = true;
    if (obstructed && p >= n)
        throw std::logic_error("common_index_divisor: obstruction at p >= n contradicts Hensel's bound");
    return obstructed;
}

} // namespace monogen
