#include "monogen/polynomial.hpp"

#include <algorithm>

namespace monogen {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
{
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coefficients)
{
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree)
{
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Integer& IntPoly::leading() const
{
    if (coeffs_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::operator[](std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPoly::evaluate(const Integer& at) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs_)
        g = gcd(g, c);
    return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c)
{
    for (auto& a : coeffs_)
        a *= c;
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a)
{
    IntPoly r = a;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

IntPoly IntPoly::divide_exact(const Integer& c) const
{
    if (c == 0)
        throw DomainError("divide_exact: division by zero");
    std::vector<Integer> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!divisible(coeffs_[i], c))
            throw DomainError("divide_exact: coefficient " + coeffs_[i].get_str() + " not divisible by " +
                              c.get_str());
        mpz_divexact(r[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const
{
    if (!divisor.is_monic())
        throw DomainError("divmod_monic: divisor must be monic");
    const std::size_t dd = static_cast<std::size_t>(divisor.degree());
    if (degree() < divisor.degree())
        return {IntPoly{}, *this};
    std::vector<Integer> rem = coeffs_;
    std::vector<Integer> quot(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Integer q = rem[k];
        quot[k - dd] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] -= q * divisor.coeffs_[j];
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string(char var) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Integer mag = abs(c);
        if (k == 0 || mag != 1)
            out += mag.get_str();
        if (k >= 1)
            out += var;
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

IntPoly pow(const IntPoly& base, unsigned e)
{
    IntPoly result = IntPoly::constant(1);
    IntPoly b = base;
    while (e > 0) {
        if (e & 1u)
            result = result * b;
        e >>= 1;
        if (e > 0)
            b = b * b;
    }
    return result;
}

Integer resultant(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    if (m == 0)
        return pow(f.leading(), static_cast<unsigned long>(n));
    if (n == 0)
        return pow(g.leading(), static_cast<unsigned long>(m));

    // Sylvester matrix: n rows of f's coefficients, m rows of g's, each row
    // in descending powers and shifted one column per row.
    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j)
            a[r][r + j] = f[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j)
            a[n + r][r + j] = g[n - j];

    // Bareiss fraction-free elimination.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == size)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Integer det = a[size - 1][size - 1];
    return sign > 0 ? det : Integer(-det);
}

Integer discriminant(const IntPoly& f)
{
    if (f.degree() < 2)
        throw DomainError("discriminant: degree must be at least 2");
    const unsigned long n = static_cast<unsigned long>(f.degree());
    Integer res = resultant(f, f.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

std::vector<IntPoly> phi_expansion(const IntPoly& f, const IntPoly& phi)
{
    if (phi.degree() < 1)
        throw DomainError("phi_expansion: phi must have positive degree");
    if (!phi.is_monic())
        throw DomainError("phi_expansion: phi must be monic");
    std::vector<IntPoly> digits;
    IntPoly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = rest.divmod_monic(phi);
        digits.push_back(std::move(r));
        rest = std::move(q);
    }
    return digits;
}

IntPoly characteristic_polynomial(const std::vector<std::vector<Integer>>& a)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw DomainError("characteristic_polynomial: matrix must be square");
    using Matrix = std::vector<std::vector<Integer>>;
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    Matrix m(n, std::vector<Integer>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        // m <- a*m + c[n-k+1]*I
        Matrix next(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Integer s = 0;
                for (std::size_t t = 0; t < n; ++t)
                    s += a[i][t] * m[t][j];
                next[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i)
            next[i][i] += c[n - k + 1];
        m = std::move(next);
        Integer trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < n; ++t)
                trace += a[i][t] * m[t][i];
        Integer q;
        mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -q;
    }
    return IntPoly(std::move(c));
}

} // namespace monogen
