#pragma once

#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace monogen {

// Prime field F_p with p < 2^63.
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return 1; }
    Integer order() const { return monogen::from_u64(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }

    Elem add(Elem a, Elem b) const
    {
        const Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;
    Elem from_integer(const Integer& n) const;
    Elem from_u64(std::uint64_t n) const { return n % p_; }
    Elem pth_root(Elem a) const { return a; }
    Elem random(std::mt19937_64& rng) const { return rng() % p_; }

    std::string elem_to_string(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

// F_p[t]/(modulus) for a monic irreducible modulus of degree k. Elements are
// coefficient vectors of length exactly k (ascending powers of the class of t).
class ExtensionField {
public:
    using Elem = std::vector<std::uint64_t>;

    ExtensionField(std::uint64_t p, std::vector<std::uint64_t> monic_modulus);

    const PrimeField& base() const { return base_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    std::uint64_t characteristic() const { return base_.characteristic(); }
    unsigned degree() const { return k_; }
    Integer order() const { return monogen::pow(base_.order(), k_); }

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const;
    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const { return a == one(); }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, const Integer& e) const;
    Elem inv(const Elem& a) const;
    Elem from_integer(const Integer& n) const;
    Elem from_u64(std::uint64_t n) const;
    // Reduce an arbitrary-length F_p coefficient vector modulo the modulus.
    Elem reduce(std::vector<std::uint64_t> v) const;
    Elem pth_root(const Elem& a) const;
    Elem random(std::mt19937_64& rng) const;

    // "1" / "x + 1" style, using x for the class of the variable.
    std::string elem_to_string(const Elem& a) const;

private:
    PrimeField base_;
    std::vector<std::uint64_t> modulus_;
    unsigned k_;
};

namespace ff {

// Dense polynomial over a field, ascending, no trailing zeros.
template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& field, Poly<F>& a)
{
    while (!a.empty() && field.is_zero(a.back()))
        a.pop_back();
}

template <class F>
long degree(const Poly<F>& a)
{
    return static_cast<long>(a.size()) - 1;
}

template <class F>
Poly<F> x_poly(const F& field)
{
    return {field.zero(), field.one()};
}

template <class F>
Poly<F> add(const F& field, const Poly<F>& a, const Poly<F>& b)
{
    Poly<F> r(std::max(a.size(), b.size()), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = field.add(r[i], b[i]);
    trim(field, r);
    return r;
}

template <class F>
Poly<F> sub(const F& field, const Poly<F>& a, const Poly<F>& b)
{
    Poly<F> r(std::max(a.size(), b.size()), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = field.sub(r[i], b[i]);
    trim(field, r);
    return r;
}

template <class F>
Poly<F> mul(const F& field, const Poly<F>& a, const Poly<F>& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly<F> r(a.size() + b.size() - 1, field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (field.is_zero(a[i]))
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
    }
    trim(field, r);
    return r;
}

template <class F>
Poly<F> scale(const F& field, const Poly<F>& a, const typename F::Elem& c)
{
    Poly<F> r(a.size(), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = field.mul(a[i], c);
    trim(field, r);
    return r;
}

// a = q*b + r with deg r < deg b; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& field, const Poly<F>& a, const Poly<F>& b)
{
    if (b.empty())
        throw DomainError("polynomial division by zero");
    if (a.size() < b.size())
        return {Poly<F>{}, a};
    Poly<F> rem = a;
    Poly<F> quot(a.size() - b.size() + 1, field.zero());
    const auto lead_inv = field.inv(b.back());
    for (std::size_t k = rem.size(); k-- >= b.size();) {
        if (field.is_zero(rem[k]))
            continue;
        const auto q = field.mul(rem[k], lead_inv);
        quot[k - b.size() + 1] = q;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[k - b.size() + 1 + j] = field.sub(rem[k - b.size() + 1 + j], field.mul(q, b[j]));
    }
    rem.resize(b.size() - 1);
    trim(field, rem);
    trim(field, quot);
    return {quot, rem};
}

template <class F>
Poly<F> mod(const F& field, const Poly<F>& a, const Poly<F>& b)
{
    return divmod(field, a, b).second;
}

template <class F>
Poly<F> quotient(const F& field, const Poly<F>& a, const Poly<F>& b)
{
    return divmod(field, a, b).first;
}

template <class F>
Poly<F> monic(const F& field, const Poly<F>& a)
{
    if (a.empty())
        return a;
    return scale(field, a, field.inv(a.back()));
}

// Monic gcd (zero if both inputs are zero).
template <class F>
Poly<F> gcd(const F& field, Poly<F> a, Poly<F> b)
{
    while (!b.empty()) {
        Poly<F> r = mod(field, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(field, a);
}

template <class F>
Poly<F> derivative(const F& field, const Poly<F>& a)
{
    if (a.size() <= 1)
        return {};
    Poly<F> r(a.size() - 1, field.zero());
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = field.mul(a[i], field.from_u64(i));
    trim(field, r);
    return r;
}

template <class F>
Poly<F> mulmod(const F& field, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m)
{
    return mod(field, mul(field, a, b), m);
}

template <class F>
Poly<F> powmod(const F& field, const Poly<F>& base, const Integer& e, const Poly<F>& m)
{
    Poly<F> result = mod(field, Poly<F>{field.one()}, m);
    if (e == 0)
        return result;
    const Poly<F> b = mod(field, base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mulmod(field, result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mulmod(field, result, b, m);
    }
    return result;
}

template <class F>
bool is_one_poly(const F& field, const Poly<F>& a)
{
    return a.size() == 1 && field.is_one(a[0]);
}

template <class F>
struct FactorEntry {
    Poly<F> factor;
    unsigned multiplicity = 1;
};

namespace detail {

template <class F>
void squarefree_parts(const F& field, const Poly<F>& f, unsigned scale_by, std::vector<FactorEntry<F>>& out)
{
    Poly<F> c = gcd(field, f, derivative(field, f));
    Poly<F> w = quotient(field, f, c);
    unsigned i = 1;
    while (degree<F>(w) > 0) {
        Poly<F> y = gcd(field, w, c);
        Poly<F> fac = quotient(field, w, y);
        if (degree<F>(fac) > 0)
            out.push_back({monic(field, fac), i * scale_by});
        w = std::move(y);
        c = quotient(field, c, w);
        ++i;
    }
    if (degree<F>(c) > 0) {
        // c' = 0: c is a polynomial in x^p.
        const std::uint64_t p = field.characteristic();
        Poly<F> root((c.size() - 1) / p + 1, field.zero());
        for (std::size_t k = 0; k < root.size(); ++k)
            root[k] = field.pth_root(c[k * p]);
        trim(field, root);
        squarefree_parts(field, monic(field, root), scale_by * static_cast<unsigned>(p), out);
    }
}

template <class F>
std::vector<std::pair<Poly<F>, unsigned>> distinct_degree(const F& field, Poly<F> f)
{
    std::vector<std::pair<Poly<F>, unsigned>> out;
    const Integer q = field.order();
    const Poly<F> x = x_poly(field);
    Poly<F> h = mod(field, x, f);
    unsigned d = 1;
    while (degree<F>(f) >= 2 * static_cast<long>(d)) {
        h = powmod(field, h, q, f);
        Poly<F> g = gcd(field, f, sub(field, h, x));
        if (degree<F>(g) > 0) {
            out.emplace_back(g, d);
            f = quotient(field, f, g);
            h = mod(field, h, f);
        }
        ++d;
    }
    if (degree<F>(f) > 0)
        out.emplace_back(monic(field, f), static_cast<unsigned>(degree<F>(f)));
    return out;
}

template <class F>
void equal_degree(const F& field, const Poly<F>& g, unsigned d, std::mt19937_64& rng, std::vector<Poly<F>>& out)
{
    const long n = degree<F>(g);
    if (n == static_cast<long>(d)) {
        out.push_back(monic(field, g));
        return;
    }
    const Integer q = field.order();
    const bool odd = field.characteristic() != 2;
    Integer exponent;
    if (odd)
        exponent = (monogen::pow(q, d) - 1) / 2;
    const unsigned trace_terms = field.degree() * d;
    while (true) {
        Poly<F> a(static_cast<std::size_t>(n), field.zero());
        for (auto& c : a)
            c = field.random(rng);
        trim(field, a);
        if (degree<F>(a) < 1)
            continue;
        Poly<F> b;
        if (odd) {
            b = sub(field, powmod(field, a, exponent, g), Poly<F>{field.one()});
        } else {
            Poly<F> t = mod(field, a, g);
            b = t;
            for (unsigned i = 1; i < trace_terms; ++i) {
                t = mulmod(field, t, t, g);
                b = add(field, b, t);
            }
        }
        Poly<F> h = gcd(field, g, b);
        if (degree<F>(h) > 0 && degree<F>(h) < n) {
            equal_degree(field, h, d, rng, out);
            equal_degree(field, quotient(field, g, h), d, rng, out);
            return;
        }
    }
}

} // namespace detail

// Complete factorization into monic irreducibles with multiplicities, in
// canonical order: by degree, then lexicographically on coefficients.
template <class F>
std::vector<FactorEntry<F>> factor(const F& field, const Poly<F>& f, std::uint64_t seed = 1)
{
    if (f.empty())
        throw DomainError("factor: zero polynomial");
    std::vector<FactorEntry<F>> out;
    if (degree<F>(f) == 0)
        return out;
    std::mt19937_64 rng(seed);
    std::vector<FactorEntry<F>> parts;
    detail::squarefree_parts(field, monic(field, f), 1, parts);
    for (const auto& part : parts) {
        for (const auto& [g, d] : detail::distinct_degree(field, part.factor)) {
            std::vector<Poly<F>> pieces;
            detail::equal_degree(field, g, d, rng, pieces);
            for (auto& piece : pieces)
                out.push_back({std::move(piece), part.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorEntry<F>& a, const FactorEntry<F>& b) {
        if (a.factor.size() != b.factor.size())
            return a.factor.size() < b.factor.size();
        return a.factor < b.factor;
    });
    return out;
}

template <class F>
bool is_irreducible(const F& field, const Poly<F>& f)
{
    if (degree<F>(f) < 1)
        return false;
    const auto fs = factor(field, f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

template <class F>
bool is_squarefree(const F& field, const Poly<F>& f)
{
    if (degree<F>(f) < 1)
        return true;
    return degree<F>(gcd(field, f, derivative(field, f))) == 0;
}

template <class F>
std::string to_string(const F& field, const Poly<F>& a, char var)
{
    if (a.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (field.is_zero(a[k]))
            continue;
        if (!first)
            out += " + ";
        first = false;
        std::string c = field.elem_to_string(a[k]);
        const bool compound = c.find(' ') != std::string::npos;
        if (k == 0)
            out += c;
        else if (c != "1")
            out += compound ? "(" + c + ")" : c;
        if (k >= 1)
            out += var;
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace ff

// A polynomial over F_p with residues in [0, p), ascending, trimmed.
struct ModPoly {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    // Lift to Z[x] with coefficients in [0, p).
    IntPoly lift() const;
    std::string to_string(char var = 'x') const;
    bool operator==(const ModPoly&) const = default;
};

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);

struct ModFactor {
    ModPoly factor;
    unsigned multiplicity = 1;
};

// Factorization of f mod p into monic irreducibles. Throws DomainError when
// f vanishes mod p, InputError when p is not a prime below 2^63.
std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed = 1);

bool is_irreducible_mod_p(const ModPoly& f);

using ResiduePoly = ff::Poly<ExtensionField>;

// Factorization of g over F_phi = F_p[x]/(phi). Throws DomainError when phi is
// reducible mod p or g is zero.
std::vector<ff::FactorEntry<ExtensionField>> factor_residual(const ResiduePoly& g, std::uint64_t p,
                                                             const ModPoly& phi, std::uint64_t seed = 1);

// Checked conversion of a prime to the machine word used by F_p arithmetic.
std::uint64_t checked_prime(const Integer& p);

} // namespace monogen
