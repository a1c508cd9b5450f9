#include "monogen/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace monogen {

namespace {

constexpr std::uint32_t kDefaultSieve = 1'000'000;

const std::vector<std::uint32_t>& default_primes()
{
    static const std::vector<std::uint32_t> cached = small_primes(kDefaultSieve);
    return cached;
}

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, const Integer& base)
{
    Integer a = base % n;
    if (a == 0)
        return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer n1 = n - 1;
    if (x == 1 || x == n1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

Integer abs_diff(const Integer& a, const Integer& b)
{
    Integer r = a - b;
    return r < 0 ? Integer(-r) : r;
}

// Brent's variant of Pollard rho. Returns 0 when no proper factor was found
// within the iteration budget.
Integer pollard_brent(const Integer& n, std::uint64_t c, std::uint64_t start, std::uint64_t budget)
{
    const Integer cc = from_u64(c);
    auto step = [&](const Integer& v) { return Integer((v * v + cc) % n); };
    Integer y = from_u64(start) % n;
    Integer x, ys;
    Integer q = 1;
    Integer g = 1;
    const std::uint64_t block = 128;
    std::uint64_t r = 1;
    std::uint64_t used = 0;
    while (g == 1 && used < budget) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i)
            y = step(y);
        used += r;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t lim = std::min(block, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = step(y);
                q = (q * abs_diff(x, y)) % n;
            }
            used += lim;
            g = gcd(q, n);
            k += block;
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        for (std::uint64_t i = 0; g == 1 && i < 4 * block + r; ++i) {
            ys = step(ys);
            g = gcd(abs_diff(x, ys), n);
        }
    }
    if (g > 1 && g < n)
        return g;
    return 0;
}

void split(const Integer& n, const FactorConfig& config, std::mt19937_64& rng,
           std::vector<Integer>& primes, Integer& cofactor)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split(root, config, rng, primes, cofactor);
        split(root, config, rng, primes, cofactor);
        return;
    }
    for (int attempt = 0; attempt < 8; ++attempt) {
        const std::uint64_t c = 1 + rng() % 1'000'003;
        const std::uint64_t start = 2 + rng() % 1'000'003;
        Integer d = pollard_brent(n, c, start, config.rho_iterations);
        if (d != 0) {
            split(d, config, rng, primes, cofactor);
            split(Integer(n / d), config, rng, primes, cofactor);
            return;
        }
    }
    cofactor *= n;
}

} // namespace

std::vector<std::uint32_t> small_primes(std::uint32_t limit)
{
    std::vector<std::uint32_t> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    static constexpr std::array<unsigned, 13> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned b : bases) {
        if (n == b)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b))
            return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned b : bases)
        if (!miller_rabin_round(n, d, s, Integer(b)))
            return false;
    // Deterministic below 3.317e24 with the bases above.
    static const Integer deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound)
        return true;
    std::mt19937_64 rng(0x6d6f6e6f67656eULL);
    for (int i = 0; i < 24; ++i) {
        Integer base = from_u64(rng()) % (n - 3) + 2;
        if (!miller_rabin_round(n, d, s, base))
            return false;
    }
    return true;
}

Integer Factorization::reconstruct_abs() const
{
    Integer r = cofactor;
    for (const auto& pp : factors)
        r *= pow(pp.prime, pp.exponent);
    return r;
}

unsigned Factorization::exponent_of(const Integer& p) const
{
    for (const auto& pp : factors)
        if (pp.prime == p)
            return pp.exponent;
    return 0;
}

Factorization factorize(const Integer& n, const FactorConfig& config)
{
    if (n == 0)
        throw DomainError("factorize: zero has no factorization");
    Factorization fac;
    fac.value = n;
    Integer rest = abs(n);
    std::map<Integer, unsigned> found;

    std::vector<std::uint32_t> larger;
    if (config.trial_limit > kDefaultSieve)
        larger = small_primes(static_cast<std::uint32_t>(std::min<std::uint64_t>(config.trial_limit, 0xffffffffu)));
    const auto& primes = larger.empty() ? default_primes() : larger;

    bool exhausted = true;
    for (std::uint32_t p : primes) {
        if (p > config.trial_limit)
            break;
        if (Integer(p) * p > rest) {
            exhausted = false;
            break;
        }
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0)
            found[Integer(p)] += e;
    }
    if (!exhausted && rest > 1) {
        found[rest] += 1;
        rest = 1;
    }

    if (rest > 1) {
        std::mt19937_64 rng(config.seed);
        std::vector<Integer> primes_found;
        Integer cofactor = 1;
        split(rest, config, rng, primes_found, cofactor);
        for (const auto& q : primes_found)
            found[q] += 1;
        for (const auto& [q, e] : found) {
            (void)e;
            while (cofactor > 1 && divisible(cofactor, q)) {
                cofactor /= q;
                found[q] += 1;
            }
        }
        fac.cofactor = cofactor;
    }

    for (const auto& [q, e] : found)
        fac.factors.push_back({q, e});
    return fac;
}

unsigned valuation(const Integer& n, const Integer& p)
{
    if (n == 0)
        throw DomainError("valuation: n = 0 has infinite valuation");
    if (p < 2)
        throw DomainError("valuation: p must be prime");
    Integer r = n;
    return static_cast<unsigned>(mpz_remove(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

SquarefreeStatus squarefree_status(const Integer& n, const FactorConfig& config)
{
    const Factorization fac = factorize(n, config);
    for (const auto& pp : fac.factors)
        if (pp.exponent >= 2)
            return {SquarefreeKind::NotSquarefree, pp.prime};
    if (fac.cofactor == 1)
        return {SquarefreeKind::Squarefree, 0};

    const Integer& c = fac.cofactor;
    if (mpz_perfect_square_p(c.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
        return {SquarefreeKind::NotSquarefree, root};
    }
    // Every prime factor of c exceeds the trial limit L, so c <= L^3 forces
    // exactly two prime factors; a non-square then has them distinct.
    const Integer limit = from_u64(config.trial_limit);
    if (c <= limit * limit * limit)
        return {SquarefreeKind::Squarefree, 0};
    return {SquarefreeKind::Unknown, 0};
}

std::vector<Integer> divisors(const Factorization& fac)
{
    if (!fac.complete())
        throw DomainError("divisors: factorization is incomplete");
    std::vector<Integer> out{1};
    for (const auto& pp : fac.factors) {
        const std::size_t base = out.size();
        Integer power = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer squarefree_kernel(const Integer& n, const FactorConfig& config)
{
    const Factorization fac = factorize(n, config);
    if (!fac.complete())
        throw DomainError("squarefree_kernel: could not factor " + n.get_str());
    Integer r = 1;
    for (const auto& pp : fac.factors)
        r *= pp.prime;
    return r;
}

} // namespace monogen
