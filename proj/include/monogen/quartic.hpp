#pragma once

#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monogen {

using Triple = std::array<Integer, 3>;

// alpha = (a + x xi + y xi^2 + z xi^3) / d for a root xi of the monic quartic f.
// Solving I(alpha) = m reduces to F(u, v) = +-i_m with i_m = d^6 m / n_xi,
// where n_xi = I(xi).
struct QuarticSetup {
    IntPoly f;
    std::array<Integer, 4> a;  // f = x^4 + a[0] x^3 + a[1] x^2 + a[2] x + a[3]
    Integer d{1};
    Integer n_xi{1};
    Integer m{1};
    Integer i_m{1};

    // Throws InputError unless f is a monic quartic, d, n_xi, m > 0 and
    // n_xi divides d^6 m.
    static QuarticSetup make(const IntPoly& f, const Integer& m, const Integer& d = 1, const Integer& n_xi = 1);
};

// Homogeneous form sum coeffs[i] * s^(deg - i) * t^i.
struct BinaryForm {
    std::vector<Integer> coeffs;

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    Integer eval(const Integer& s, const Integer& t) const;
    Integer content() const;
    std::string to_string(char s = 'u', char t = 'v') const;
    bool operator==(const BinaryForm&) const = default;
};

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
BinaryForm operator*(const Integer& c, const BinaryForm& a);

enum class FormIrreducibility { Irreducible, Reducible, Unknown };
std::string to_string(FormIrreducibility r);

// Rational linear factors, plus mod-p degree patterns for degree 4.
FormIrreducibility binary_form_irreducibility(const BinaryForm& form);

// Coefficients of x^2, xy, y^2, xz, yz, z^2.
struct TernaryQuadraticForm {
    std::array<Integer, 6> c;

    Integer eval(const Integer& x, const Integer& y, const Integer& z) const;
    Integer eval(const Triple& t) const { return eval(t[0], t[1], t[2]); }
    bool is_zero() const;
    std::string to_string() const;
    bool operator==(const TernaryQuadraticForm&) const = default;
};

TernaryQuadraticForm operator*(const Integer& k, const TernaryQuadraticForm& q);
TernaryQuadraticForm operator-(const TernaryQuadraticForm& a, const TernaryQuadraticForm& b);

BinaryForm resolvent_cubic(const QuarticSetup& setup);
std::pair<TernaryQuadraticForm, TernaryQuadraticForm> quadratic_forms(const QuarticSetup& setup);

// All (u, v) with max(|u|, |v|) <= bound and F(u, v) = +-rhs, sorted.
std::vector<std::pair<Integer, Integer>> solve_cubic_thue_small(const BinaryForm& form, const Integer& rhs,
                                                                std::int64_t bound);

// First zero with z != 0 in the order (|z|, |y|, |x|) with z > 0 and
// positive signs before negative ones.
std::optional<Triple> q0_solution(const TernaryQuadraticForm& q0, std::int64_t bound);

// x = r x0 + p, y = r y0 + q, z = r z0 turns Q0 = 0 into
// r (c1 p + c2 q) = c3 p^2 + c4 pq + c5 q^2; then
// k (x, y, z) = C (p^2, pq, q^2).
struct Parametrization {
    Triple base;
    std::array<Integer, 5> c;                   // c1..c5, content removed
    std::array<std::array<Integer, 3>, 3> matrix;  // rows x, y, z; columns p^2, pq, q^2
    Integer d0{0};
    Integer det{0};
    std::vector<Integer> k_divisors;  // positive divisors of |det| / d0^2
    bool degenerate = false;

    // C (p^2, pq, q^2)
    Triple apply(const Integer& p, const Integer& q) const;
};

Parametrization parametrize(const TernaryQuadraticForm& q0, const Triple& base);

// F1(p, q) = Q1(C(p^2, pq, q^2)) = k^2 u and F2(p, q) = Q2(...) = k^2 v.
struct ThueSystem {
    BinaryForm f1;
    BinaryForm f2;
    Integer rhs1;
    Integer rhs2;
    FormIrreducibility f1_irreducible = FormIrreducibility::Unknown;
    FormIrreducibility f2_irreducible = FormIrreducibility::Unknown;
};

ThueSystem quartic_thue_forms(const Parametrization& param, const TernaryQuadraticForm& q1,
                              const TernaryQuadraticForm& q2, const Integer& u, const Integer& v, const Integer& k);

struct SearchBounds {
    std::int64_t thue = 1000;   // cubic Thue box for (u, v)
    std::int64_t pq = 1000;     // (p, q) box for the quartic Thue step
    std::int64_t xyz = 100;     // direct (x, y, z) fallback box
    std::int64_t q0 = 100;      // box for a zero of Q0
    unsigned threads = 0;       // 0: hardware concurrency
};

// Sign-normalized triple: first nonzero coordinate positive.
Triple canonical(const Triple& t);

struct GeneratorSolution {
    Triple xyz;
    Integer u;
    Integer v;
};

struct BranchReport {
    enum class Method { Parametrized, DirectFallback };
    Integer u;
    Integer v;
    TernaryQuadraticForm q0;
    std::optional<Triple> base;
    std::optional<Parametrization> param;
    std::optional<ThueSystem> thue;  // forms with k = 1 right-hand sides
    Method method = Method::Parametrized;
    std::string note;
    std::vector<Triple> solutions;
};

struct GeneratorSearch {
    QuarticSetup setup;
    SearchBounds bounds;
    BinaryForm cubic;
    FormIrreducibility cubic_irreducible = FormIrreducibility::Unknown;
    TernaryQuadraticForm q1;
    TernaryQuadraticForm q2;
    std::vector<std::pair<Integer, Integer>> cubic_solutions;
    std::vector<BranchReport> branches;
    std::vector<GeneratorSolution> solutions;  // canonical, deduplicated, sorted
};

GeneratorSearch find_generators(const QuarticSetup& setup, const SearchBounds& bounds = {});

// All (x, y, z) in the box with Q1 = u and Q2 = v, solving Q2 = v for x.
std::vector<Triple> direct_search(const QuarticSetup& setup, const Integer& u, const Integer& v,
                                  std::int64_t bound);

// I(alpha) for alpha = (x xi + y xi^2 + z xi^3) / d from D(alpha) = I(alpha)^2 D_K.
Integer index_of_element(const IntPoly& f, const Triple& xyz, const Integer& d, const Integer& disc_k);

std::string to_string(const Triple& t);

} // namespace monogen
