#include "monogen/newton.hpp"

#include "monogen/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace monogen {

Side Side::between(LatticePoint start, LatticePoint end)
{
    Side s;
    s.start = start;
    s.end = end;
    s.length = end.i - start.i;
    s.height = start.v - end.v;
    if (s.length <= 0 || s.height <= 0)
        throw DomainError("Side: endpoints do not form a negative-slope segment");
    s.degree = std::gcd(s.length, s.height);
    s.e = s.length / s.degree;
    s.h = s.height / s.degree;
    return s;
}

std::string Side::slope_string() const
{
    return "-" + std::to_string(h) + "/" + std::to_string(e);
}

namespace {

// Orientation of (o, a, b); positive for a counter-clockwise turn.
std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b)
{
    return (a.i - o.i) * (b.v - o.v) - (a.v - o.v) * (b.i - o.i);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    // b > 0, a >= 0
    return (a + b - 1) / b;
}

std::int64_t poly_valuation(const IntPoly& a, const Integer& p)
{
    std::int64_t best = -1;
    for (const auto& c : a.coefficients()) {
        if (c == 0)
            continue;
        const auto v = static_cast<std::int64_t>(valuation(c, p));
        if (best < 0 || v < best)
            best = v;
    }
    return best;
}

std::vector<LatticePoint> expansion_points(const std::vector<IntPoly>& expansion, const Integer& p)
{
    std::vector<LatticePoint> points;
    for (std::size_t i = 0; i < expansion.size(); ++i)
        if (!expansion[i].is_zero())
            points.push_back({static_cast<std::int64_t>(i), poly_valuation(expansion[i], p)});
    return points;
}

} // namespace

std::vector<Side> principal_polygon(std::span<const LatticePoint> points)
{
    if (points.empty())
        throw DomainError("principal_polygon: empty point set");
    std::map<std::int64_t, std::int64_t> lowest;
    for (const auto& pt : points) {
        auto [it, inserted] = lowest.emplace(pt.i, pt.v);
        if (!inserted)
            it->second = std::min(it->second, pt.v);
    }
    if (lowest.begin()->first != 0)
        throw DomainError("principal_polygon: no point with i = 0");

    std::vector<LatticePoint> hull;
    for (const auto& [i, v] : lowest) {
        const LatticePoint pt{i, v};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }

    std::vector<Side> sides;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        if (hull[k + 1].v >= hull[k].v)
            break;
        sides.push_back(Side::between(hull[k], hull[k + 1]));
    }
    return sides;
}

std::int64_t lattice_count(std::span<const Side> sides)
{
    std::int64_t count = 0;
    for (const auto& s : sides) {
        for (std::int64_t x = std::max<std::int64_t>(s.start.i + 1, 1); x <= s.end.i; ++x) {
            const std::int64_t top = s.start.v - ceil_div(s.h * (x - s.start.i), s.e);
            if (top > 0)
                count += top;
        }
    }
    return count;
}

std::vector<LatticePoint> NewtonPolygon::vertices() const
{
    std::vector<LatticePoint> out;
    for (const auto& s : sides) {
        if (out.empty())
            out.push_back(s.start);
        out.push_back(s.end);
    }
    return out;
}

NewtonPolygon newton_polygon(const IntPoly& f, const IntPoly& phi, const Integer& p)
{
    NewtonPolygon poly;
    poly.phi = phi;
    poly.p = p;
    poly.points = expansion_points(phi_expansion(f, phi), p);
    poly.sides = principal_polygon(poly.points);
    return poly;
}

std::int64_t phi_index(const NewtonPolygon& polygon, unsigned deg_phi)
{
    return static_cast<std::int64_t>(deg_phi) * lattice_count(polygon.sides);
}

std::string ResidualPoly::to_string() const
{
    const ExtensionField field(phi.p, phi.coeffs);
    return ff::to_string(field, coefficients, 'y');
}

ResidualPoly residual_polynomial(const std::vector<IntPoly>& expansion, const IntPoly& phi, const Integer& p,
                                 const Side& side)
{
    const std::uint64_t pw = checked_prime(p);
    ResidualPoly res;
    res.side = side;
    res.phi = reduce_mod(phi, pw);
    if (!phi.is_monic() || !is_irreducible_mod_p(res.phi))
        throw DomainError("residual_polynomial: phi must be monic and irreducible mod p");
    const ExtensionField field(pw, res.phi.coeffs);

    res.coefficients.assign(static_cast<std::size_t>(side.degree) + 1, field.zero());
    for (std::int64_t j = 0; j <= side.degree; ++j) {
        const std::size_t idx = static_cast<std::size_t>(side.start.i + j * side.e);
        if (idx >= expansion.size() || expansion[idx].is_zero())
            continue;
        const IntPoly& a = expansion[idx];
        const std::int64_t on_line = side.start.v - j * side.h;
        const std::int64_t v = poly_valuation(a, p);
        if (v < on_line)
            throw DomainError("residual_polynomial: expansion point lies below the side");
        if (v > on_line)
            continue;
        const ModPoly reduced = reduce_mod(a.divide_exact(pow(p, static_cast<unsigned long>(v))), pw);
        res.coefficients[static_cast<std::size_t>(j)] = field.reduce(reduced.coeffs);
    }
    if (field.is_zero(res.coefficients.front()) || field.is_zero(res.coefficients.back()))
        throw DomainError("residual_polynomial: side endpoints are not expansion points");
    return res;
}

ResidualPoly residual_polynomial(const IntPoly& f, const IntPoly& phi, const Integer& p, const Side& side)
{
    return residual_polynomial(phi_expansion(f, phi), phi, p, side);
}

std::string IndexValuation::to_string() const
{
    return (exact() ? "Exact(" : "LowerBound(") + std::to_string(value) + ")";
}

OreAnalysis ore_analysis(const IntPoly& f, const Integer& p, std::uint64_t seed)
{
    if (!f.is_monic())
        throw DomainError("ore_analysis: polynomial must be monic");
    const std::uint64_t pw = checked_prime(p);

    OreAnalysis out;
    out.p = p;
    std::int64_t total = 0;
    bool regular = true;
    for (const auto& fac : factor_mod_p(f, pw, seed)) {
        PhiReport rep;
        rep.phi = fac.factor.lift();
        rep.multiplicity = fac.multiplicity;
        auto expansion = phi_expansion(f, rep.phi);
        // A lift dividing f has no i = 0 point; shift it by p.
        while (expansion.front().is_zero()) {
            rep.phi = rep.phi + IntPoly::constant(p);
            expansion = phi_expansion(f, rep.phi);
        }
        rep.polygon.phi = rep.phi;
        rep.polygon.p = p;
        rep.polygon.points = expansion_points(expansion, p);
        rep.polygon.sides = principal_polygon(rep.polygon.points);
        if (rep.polygon.sides.empty() || rep.polygon.sides.back().end.i != static_cast<std::int64_t>(fac.multiplicity))
            throw std::logic_error("ore_analysis: principal polygon does not end at the multiplicity of phi");

        for (const auto& side : rep.polygon.sides) {
            ResidualAnalysis ra;
            ra.residual = residual_polynomial(expansion, rep.phi, p, side);
            ra.factors = factor_residual(ra.residual.coefficients, pw, ra.residual.phi, seed);
            ra.squarefree = std::all_of(ra.factors.begin(), ra.factors.end(),
                                        [](const auto& e) { return e.multiplicity == 1; });
            rep.regular = rep.regular && ra.squarefree;
            rep.residuals.push_back(std::move(ra));
        }
        rep.phi_index = phi_index(rep.polygon, static_cast<unsigned>(rep.phi.degree()));
        total += rep.phi_index;
        regular = regular && rep.regular;
        out.phis.push_back(std::move(rep));
    }
    out.verdict = {regular ? IndexValuation::Kind::Exact : IndexValuation::Kind::LowerBound, total};
    return out;
}

SplittingType ore_factorization(const OreAnalysis& analysis)
{
    if (!analysis.regular())
        throw NotRegular("ore_factorization: f is not p-regular for p = " + analysis.p.get_str());
    SplittingType st;
    for (const auto& rep : analysis.phis) {
        const auto deg_phi = static_cast<unsigned>(rep.phi.degree());
        for (const auto& ra : rep.residuals) {
            const auto e = static_cast<unsigned>(ra.residual.side.e);
            for (const auto& psi : ra.factors)
                st.primes.push_back({e, deg_phi * static_cast<unsigned>(ff::degree<ExtensionField>(psi.factor))});
        }
    }
    st.canonicalize();
    return st;
}

SplittingType ore_factorization(const IntPoly& f, const Integer& p)
{
    return ore_factorization(ore_analysis(f, p));
}

} // namespace monogen
