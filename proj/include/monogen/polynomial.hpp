#pragma once

#include "monogen/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monogen {

// Dense univariate polynomial over Z, coefficients in ascending degree.
// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly monomial(const Integer& c, std::size_t degree);
    static IntPoly constant(const Integer& c) { return monomial(c, 0); }
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Integer& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    // Coefficient of x^i (zero past the degree).
    Integer operator[](std::size_t i) const;
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    Integer evaluate(const Integer& at) const;
    IntPoly derivative() const;
    Integer content() const;

    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend IntPoly operator-(const IntPoly& a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    // Exact division of every coefficient; throws DomainError when inexact.
    IntPoly divide_exact(const Integer& c) const;

    // Quotient and remainder by a monic divisor.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    // Descending powers, explicit signs, no '*': "x^3 - x^2 - 2x - 8".
    std::string to_string(char var = 'x') const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned e);

// Grammar: integer literals with optional sign, the variable x, operators
// + - * ^, non-negative decimal exponents, whitespace ignored. Implicit
// products such as "2x" are accepted so printed polynomials parse back.
class ParseError : public InputError {
public:
    ParseError(std::size_t position, const std::string& what);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

IntPoly parse_poly(std::string_view text);

// Resultant by fraction-free elimination of the Sylvester matrix.
Integer resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) Res(f, f') / lc(f); throws DomainError for degree < 2.
Integer discriminant(const IntPoly& f);

// f = sum a_i phi^i with deg a_i < deg phi. Throws DomainError for non-monic
// or constant phi.
std::vector<IntPoly> phi_expansion(const IntPoly& f, const IntPoly& phi);

// Characteristic polynomial of an integer square matrix (row-major), via
// Faddeev-LeVerrier with exact integer divisions.
IntPoly characteristic_polynomial(const std::vector<std::vector<Integer>>& matrix);

} // namespace monogen
