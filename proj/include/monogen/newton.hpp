#pragma once

#include "monogen/dedekind.hpp"
#include "monogen/finite_field.hpp"
#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monogen {

// (i, v): i indexes the phi-power, v is the p-adic valuation of a_i.
struct LatticePoint {
    std::int64_t i = 0;
    std::int64_t v = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// A side of slope -h/e (h, e > 0 coprime) with length = degree * e and
// height = degree * h.
struct Side {
    LatticePoint start;
    LatticePoint end;
    std::int64_t length = 0;
    std::int64_t height = 0;
    std::int64_t h = 0;
    std::int64_t e = 1;
    std::int64_t degree = 0;

    static Side between(LatticePoint start, LatticePoint end);
    // "-h/e"
    std::string slope_string() const;
    bool operator==(const Side&) const = default;
};

// Negative-slope part of the lower convex hull, sides ordered by increasing
// slope. Throws DomainError for an empty set or one without an i = 0 point.
std::vector<Side> principal_polygon(std::span<const LatticePoint> points);

// Lattice points (x, y) with x >= 1, y >= 1 on or under the polygon.
std::int64_t lattice_count(std::span<const Side> sides);

struct NewtonPolygon {
    IntPoly phi;
    Integer p;
    std::vector<LatticePoint> points;
    std::vector<Side> sides;

    std::vector<LatticePoint> vertices() const;
};

// The phi-expansion points of f and their principal polygon.
NewtonPolygon newton_polygon(const IntPoly& f, const IntPoly& phi, const Integer& p);

// deg(phi) times the lattice count of the polygon.
std::int64_t phi_index(const NewtonPolygon& polygon, unsigned deg_phi);

// Residual polynomial t_d y^d + ... + t_0 over F_phi attached to a side.
struct ResidualPoly {
    Side side;
    ModPoly phi;
    ResiduePoly coefficients;  // t_0 .. t_d

    std::string to_string() const;
};

ResidualPoly residual_polynomial(const IntPoly& f, const IntPoly& phi, const Integer& p, const Side& side);
ResidualPoly residual_polynomial(const std::vector<IntPoly>& expansion, const IntPoly& phi, const Integer& p,
                                 const Side& side);

struct ResidualAnalysis {
    ResidualPoly residual;
    std::vector<ff::FactorEntry<ExtensionField>> factors;
    bool squarefree = true;
};

struct PhiReport {
    IntPoly phi;
    unsigned multiplicity = 1;  // exponent of phi in f mod p
    NewtonPolygon polygon;
    std::vector<ResidualAnalysis> residuals;
    std::int64_t phi_index = 0;
    bool regular = true;
};

struct IndexValuation {
    enum class Kind { Exact, LowerBound };
    Kind kind = Kind::Exact;
    std::int64_t value = 0;

    bool exact() const { return kind == Kind::Exact; }
    std::string to_string() const;
    bool operator==(const IndexValuation&) const = default;
};

struct OreAnalysis {
    Integer p;
    std::vector<PhiReport> phis;
    IndexValuation verdict;

    bool regular() const { return verdict.exact(); }
};

OreAnalysis ore_analysis(const IntPoly& f, const Integer& p, std::uint64_t seed = 1);

class NotRegular : public DomainError {
public:
    using DomainError::DomainError;
};

// Splitting of p from a regular analysis; throws NotRegular otherwise.
SplittingType ore_factorization(const OreAnalysis& analysis);
SplittingType ore_factorization(const IntPoly& f, const Integer& p);

} // namespace monogen
