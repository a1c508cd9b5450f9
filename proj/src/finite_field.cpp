#include "monogen/finite_field.hpp"

#include "monogen/arith.hpp"

namespace monogen {

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p < 2 || p >= (std::uint64_t{1} << 63))
        throw DomainError("PrimeField: modulus out of range");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const
{
    Elem r = 1 % p_;
    while (e > 0) {
        if (e & 1u)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const
{
    if (a == 0)
        throw DomainError("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

PrimeField::Elem PrimeField::from_integer(const Integer& n) const
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p_));
    return to_u64(r);
}

ExtensionField::ExtensionField(std::uint64_t p, std::vector<std::uint64_t> monic_modulus)
    : base_(p), modulus_(std::move(monic_modulus))
{
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw DomainError("ExtensionField: modulus must be monic of positive degree");
    k_ = static_cast<unsigned>(modulus_.size() - 1);
}

ExtensionField::Elem ExtensionField::one() const
{
    Elem r(k_, 0);
    r[0] = 1;
    return r;
}

bool ExtensionField::is_zero(const Elem& a) const
{
    for (auto c : a)
        if (c != 0)
            return false;
    return true;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const
{
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i)
        r[i] = base_.add(a[i], b[i]);
    return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const
{
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i)
        r[i] = base_.sub(a[i], b[i]);
    return r;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const
{
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i)
        r[i] = base_.neg(a[i]);
    return r;
}

ExtensionField::Elem ExtensionField::reduce(std::vector<std::uint64_t> v) const
{
    for (auto& c : v)
        c %= base_.characteristic();
    for (std::size_t i = v.size(); i-- > k_;) {
        const std::uint64_t c = v[i];
        if (c == 0)
            continue;
        for (unsigned j = 0; j < k_; ++j)
            v[i - k_ + j] = base_.sub(v[i - k_ + j], base_.mul(c, modulus_[j]));
        v[i] = 0;
    }
    v.resize(k_, 0);
    return v;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const
{
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (a[i] == 0)
            continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
    return reduce(std::move(prod));
}

ExtensionField::Elem ExtensionField::pow(const Elem& a, const Integer& e) const
{
    Elem r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = mul(r, a);
    }
    return r;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const
{
    if (is_zero(a))
        throw DomainError("ExtensionField: inverse of zero");
    return pow(a, order() - 2);
}

ExtensionField::Elem ExtensionField::from_integer(const Integer& n) const
{
    Elem r(k_, 0);
    r[0] = base_.from_integer(n);
    return r;
}

ExtensionField::Elem ExtensionField::from_u64(std::uint64_t n) const
{
    Elem r(k_, 0);
    r[0] = base_.from_u64(n);
    return r;
}

ExtensionField::Elem ExtensionField::pth_root(const Elem& a) const
{
    // a^(q/p) inverts Frobenius.
    return pow(a, monogen::pow(base_.order(), k_ - 1));
}

ExtensionField::Elem ExtensionField::random(std::mt19937_64& rng) const
{
    Elem r(k_);
    for (auto& c : r)
        c = base_.random(rng);
    return r;
}

std::string ExtensionField::elem_to_string(const Elem& a) const
{
    ModPoly m{base_.characteristic(), a};
    while (!m.coeffs.empty() && m.coeffs.back() == 0)
        m.coeffs.pop_back();
    return m.to_string('x');
}

IntPoly ModPoly::lift() const
{
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs)
        c.push_back(monogen::from_u64(v));
    return IntPoly(std::move(c));
}

std::string ModPoly::to_string(char var) const
{
    if (coeffs.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const std::uint64_t c = coeffs[k];
        if (c == 0)
            continue;
        if (!first)
            out += " + ";
        first = false;
        if (k == 0 || c != 1)
            out += std::to_string(c);
        if (k >= 1)
            out += var;
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p)
{
    const PrimeField field(p);
    ModPoly m{p, {}};
    m.coeffs.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients())
        m.coeffs.push_back(field.from_integer(c));
    while (!m.coeffs.empty() && m.coeffs.back() == 0)
        m.coeffs.pop_back();
    return m;
}

std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed)
{
    checked_prime(monogen::from_u64(p));
    const ModPoly fbar = reduce_mod(f, p);
    if (fbar.coeffs.empty())
        throw DomainError("factor_mod_p: polynomial vanishes mod " + std::to_string(p));
    const PrimeField field(p);
    std::vector<ModFactor> out;
    for (auto& entry : ff::factor(field, fbar.coeffs, seed))
        out.push_back({ModPoly{p, std::move(entry.factor)}, entry.multiplicity});
    return out;
}

bool is_irreducible_mod_p(const ModPoly& f)
{
    return ff::is_irreducible(PrimeField(f.p), f.coeffs);
}

std::vector<ff::FactorEntry<ExtensionField>> factor_residual(const ResiduePoly& g, std::uint64_t p,
                                                             const ModPoly& phi, std::uint64_t seed)
{
    if (phi.p != p)
        throw DomainError("factor_residual: phi is reduced modulo a different prime");
    if (phi.coeffs.empty() || phi.coeffs.back() != 1 || !is_irreducible_mod_p(phi))
        throw DomainError("factor_residual: phi = " + phi.to_string() + " is not monic irreducible mod " +
                          std::to_string(p));
    const ExtensionField field(p, phi.coeffs);
    return ff::factor(field, g, seed);
}

std::uint64_t checked_prime(const Integer& p)
{
    if (!fits_u64(p) || p >= monogen::pow(Integer(2), 63))
        throw InputError("prime " + p.get_str() + " exceeds the supported range (< 2^63)");
    if (!is_prime(p))
        throw InputError(p.get_str() + " is not prime");
    return to_u64(p);
}

} // namespace monogen
