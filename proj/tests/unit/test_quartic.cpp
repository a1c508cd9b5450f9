#include "monogen/quartic.hpp"

#include "monogen/monogenity.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace monogen;

namespace {

using Set = std::set<Triple>;

QuarticSetup setup_of(const char* f, long m = 1)
{
    return QuarticSetup::make(parse_poly(f), m);
}

SearchBounds small_bounds(std::int64_t b)
{
    SearchBounds s;
    s.thue = b;
    s.pq = b;
    s.xyz = b;
    s.q0 = b;
    s.threads = 2;
    return s;
}

Set solution_set(const GeneratorSearch& s)
{
    Set out;
    for (const auto& sol : s.solutions)
        out.insert(sol.xyz);
    return out;
}

TernaryQuadraticForm form(long xx, long xy, long yy, long xz, long yz, long zz)
{
    return TernaryQuadraticForm{{xx, xy, yy, xz, yz, zz}};
}

Integer index_form(const QuarticSetup& s, const Triple& t)
{
    const auto [q1, q2] = quadratic_forms(s);
    return resolvent_cubic(s).eval(q1.eval(t), q2.eval(t));
}

// Every primitive triple in the cube with |F(Q1, Q2)| = i_m, canonicalized.
Set brute_force(const QuarticSetup& s, long box)
{
    Set out;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y)
            for (long z = -box; z <= box; ++z) {
                const Triple t{x, y, z};
                if (abs(index_form(s, t)) == s.i_m)
                    out.insert(canonical(t));
            }
    return out;
}

} // namespace

TEST(QuarticSetup, IndexTarget)
{
    const auto s = QuarticSetup::make(parse_poly("x^4 - 2"), 3, 2, 4);
    EXPECT_EQ(s.i_m, 48);
    EXPECT_EQ(s.a, (std::array<Integer, 4>{0, 0, 0, -2}));
    const auto t = QuarticSetup::make(parse_poly("x^4 + 3x^3 - x^2 + 5x + 7"), 1);
    EXPECT_EQ(t.a, (std::array<Integer, 4>{3, -1, 5, 7}));
    EXPECT_EQ(t.i_m, 1);
}

TEST(QuarticSetup, RejectsBadInput)
{
    EXPECT_THROW(setup_of("x^3 - 2"), InputError);
    EXPECT_THROW(setup_of("2x^4 - 2"), InputError);
    EXPECT_THROW(setup_of("x^4 - 2", 0), InputError);
    EXPECT_THROW(QuarticSetup::make(parse_poly("x^4 - 2"), 1, 0, 1), InputError);
    EXPECT_THROW(QuarticSetup::make(parse_poly("x^4 - 2"), 1, 1, 2), InputError);
    EXPECT_NO_THROW(QuarticSetup::make(parse_poly("x^4 - 2"), 1, 2, 64));
}

TEST(ResolventCubic, PureQuartics)
{
    EXPECT_EQ(resolvent_cubic(setup_of("x^4 - 2")), (BinaryForm{{1, 0, 8, 0}}));
    EXPECT_EQ(resolvent_cubic(setup_of("x^4 + 1")), (BinaryForm{{1, 0, -4, 0}}));
    EXPECT_EQ(resolvent_cubic(setup_of("x^4 - 2")).to_string(), "u^3 + 8uv^2");
    EXPECT_EQ(binary_form_irreducibility(resolvent_cubic(setup_of("x^4 - 2"))), FormIrreducibility::Reducible);
    EXPECT_EQ(binary_form_irreducibility(resolvent_cubic(setup_of("x^4 + 1"))), FormIrreducibility::Reducible);
}

TEST(ResolventCubic, BiquadraticFactorization)
{
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            if (b == 0)
                continue;
            const IntPoly f({b, 0, a, 0, 1});
            const BinaryForm lin{{1, -a}};
            const BinaryForm quad{{1, 0, -4 * b}};
            EXPECT_EQ(resolvent_cubic(QuarticSetup::make(f, 1)), lin * quad) << a << " " << b;
        }
}

TEST(ResolventCubic, GeneralQuartic)
{
    EXPECT_EQ(resolvent_cubic(setup_of("x^4 - x - 1")), (BinaryForm{{1, 0, 4, -1}}));
    EXPECT_EQ(binary_form_irreducibility(resolvent_cubic(setup_of("x^4 - x - 1"))),
              FormIrreducibility::Irreducible);
}

TEST(QuadraticForms, PureQuartics)
{
    const auto [q1, q2] = quadratic_forms(setup_of("x^4 - 2"));
    EXPECT_EQ(q1, form(1, 0, 0, 0, 0, -2));
    EXPECT_EQ(q2, form(0, 0, 1, -1, 0, 0));
    EXPECT_EQ(q1.to_string(), "x^2 - 2z^2");
    EXPECT_EQ(q2.to_string(), "y^2 - xz");
    const auto [r1, r2] = quadratic_forms(setup_of("x^4 + 1"));
    EXPECT_EQ(r1, form(1, 0, 0, 0, 0, 1));
    EXPECT_EQ(r2, form(0, 0, 1, -1, 0, 0));
}

TEST(QuadraticForms, ValuesAtXi)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto f = testing_support::random_poly(rng, 4, 30, true);
        const auto [q1, q2] = quadratic_forms(QuarticSetup::make(f, 1));
        EXPECT_EQ(q1.eval(1, 0, 0), 1);
        EXPECT_EQ(q2.eval(1, 0, 0), 0);
    }
}

TEST(CubicThue, SmallExamples)
{
    using Sol = std::vector<std::pair<Integer, Integer>>;
    const auto c = resolvent_cubic(setup_of("x^4 - 2"));
    EXPECT_EQ(solve_cubic_thue_small(c, 1, 50), (Sol{{-1, 0}, {1, 0}}));
    EXPECT_TRUE(solve_cubic_thue_small(c, 2, 50).empty());
    const auto d = resolvent_cubic(setup_of("x^4 + 1"));
    EXPECT_EQ(solve_cubic_thue_small(d, 1, 50), (Sol{{-1, 0}, {1, 0}}));
}

TEST(CubicThue, MatchesEnumeration)
{
    const BinaryForm c{{1, 0, 4, -1}};
    for (long rhs : {1, 2, 3, 5, 7}) {
        std::vector<std::pair<Integer, Integer>> expect;
        for (long u = -20; u <= 20; ++u)
            for (long v = -20; v <= 20; ++v)
                if (abs(c.eval(u, v)) == rhs)
                    expect.emplace_back(u, v);
        EXPECT_EQ(solve_cubic_thue_small(c, rhs, 20), expect) << rhs;
    }
}

TEST(Q0Solution, Examples)
{
    EXPECT_EQ(q0_solution(form(0, 0, 1, -1, 0, 0), 10), (Triple{0, 0, 1}));
    EXPECT_FALSE(q0_solution(form(1, 0, 1, 0, 0, 1), 10).has_value());
    // x^2 + z^2 vanishes only on (0, y, 0).
    EXPECT_FALSE(q0_solution(form(1, 0, 0, 0, 0, 1), 10).has_value());
    const auto t = q0_solution(form(1, 0, 1, 0, 0, -2), 10);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(*t, (Triple{1, 1, 1}));
}

TEST(Parametrize, BasePointOneOneOne)
{
    const auto q0 = form(0, 0, 1, -1, 0, 0);
    const auto par = parametrize(q0, {1, 1, 1});
    EXPECT_EQ(par.c, (std::array<Integer, 5>{1, -2, 0, 0, 1}));
    using Row = std::array<Integer, 3>;
    EXPECT_EQ(par.matrix[0], (Row{1, -2, 1}));
    EXPECT_EQ(par.matrix[1], (Row{0, 1, -1}));
    EXPECT_EQ(par.matrix[2], (Row{0, 0, 1}));
    EXPECT_EQ(par.det, 1);
    EXPECT_EQ(par.d0, 1);
    EXPECT_EQ(par.k_divisors, (std::vector<Integer>{1}));
    EXPECT_FALSE(par.degenerate);
    EXPECT_EQ(par.apply(2, 1), (Triple{1, 1, 1}));
    EXPECT_EQ(par.apply(1, 0), (Triple{1, 0, 0}));
}

TEST(Parametrize, NonPrimitiveBaseIsProjectivelyEqual)
{
    const auto q0 = form(0, 0, 1, -1, 0, 0);
    const auto a = parametrize(q0, {1, 1, 1});
    const auto b = parametrize(q0, {2, 2, 2});
    EXPECT_EQ(a.c, b.c);
    EXPECT_EQ(a.matrix, b.matrix);
    EXPECT_EQ(a.det, b.det);
}

TEST(Parametrize, MirrorBase)
{
    const auto par = parametrize(form(0, 0, 1, -1, 0, 0), {1, -1, 1});
    EXPECT_EQ(par.c, (std::array<Integer, 5>{1, 2, 0, 0, 1}));
    EXPECT_EQ(par.apply(2, -1), (Triple{1, -1, 1}));
}

TEST(Parametrize, RejectsBadBase)
{
    const auto q0 = form(0, 0, 1, -1, 0, 0);
    EXPECT_THROW(parametrize(q0, {1, 0, 0}), DomainError);
    EXPECT_THROW(parametrize(q0, {1, 2, 1}), DomainError);
}

TEST(Parametrize, ComposesToZero)
{
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        std::array<Integer, 6> c;
        for (auto& v : c)
            v = static_cast<long>(rng() % 11) - 5;
        const TernaryQuadraticForm q0{c};
        const auto base = q0_solution(q0, 8);
        if (!base)
            continue;
        const auto par = parametrize(q0, *base);
        if (par.degenerate)
            continue;
        ++checked;
        for (long p = -4; p <= 4; ++p)
            for (long q = -4; q <= 4; ++q)
                EXPECT_EQ(q0.eval(par.apply(p, q)), 0) << q0.to_string();
        // k (x, y, z) = C (p^2, pq, q^2) with k | det / d0^2 inverts back.
        EXPECT_EQ(par.k_divisors.front(), 1);
        EXPECT_TRUE(divisible(par.det, par.d0 * par.d0));
    }
    EXPECT_GE(checked, 20);
}

TEST(QuarticThueForms, PureQuartic)
{
    const auto s = setup_of("x^4 - 2");
    const auto [q1, q2] = quadratic_forms(s);
    const auto par = parametrize(form(0, 0, 1, -1, 0, 0), {1, 1, 1});
    const auto sys = quartic_thue_forms(par, q1, q2, -1, 0, 1);
    EXPECT_EQ(sys.f1, (BinaryForm{{1, -4, 6, -4, -1}}));
    EXPECT_EQ(sys.f2, (BinaryForm{{0, 0, 0, 0, 0}}));
    EXPECT_EQ(sys.rhs1, -1);
    EXPECT_EQ(sys.rhs2, 0);
    EXPECT_EQ(sys.f1.eval(1, 0), 1);
    EXPECT_EQ(sys.f1.eval(2, 1), -1);
    EXPECT_EQ(sys.f1_irreducible, FormIrreducibility::Irreducible);
}

TEST(QuarticThueForms, AgreesWithEvaluation)
{
    const auto s = setup_of("x^4 - x - 1");
    const auto [q1, q2] = quadratic_forms(s);
    const auto search = find_generators(s, small_bounds(40));
    ASSERT_FALSE(search.branches.empty());
    for (const auto& br : search.branches) {
        if (!br.param)
            continue;
        const auto sys = quartic_thue_forms(*br.param, q1, q2, br.u, br.v, 3);
        EXPECT_EQ(sys.rhs1, 9 * br.u);
        EXPECT_EQ(sys.rhs2, 9 * br.v);
        for (long p = -3; p <= 3; ++p)
            for (long q = -3; q <= 3; ++q) {
                const Triple t = br.param->apply(p, q);
                EXPECT_EQ(sys.f1.eval(p, q), q1.eval(t));
                EXPECT_EQ(sys.f2.eval(p, q), q2.eval(t));
            }
    }
}

TEST(FormIrreducibility, Quartics)
{
    EXPECT_EQ(binary_form_irreducibility(BinaryForm{{1, 0, 0, 0, -2}}), FormIrreducibility::Irreducible);
    EXPECT_EQ(binary_form_irreducibility(BinaryForm{{1, 0, 0, 0, 0}}), FormIrreducibility::Reducible);
    EXPECT_EQ(binary_form_irreducibility(BinaryForm{{1, 0, 0, 0, -1}}), FormIrreducibility::Reducible);
    EXPECT_NE(binary_form_irreducibility(BinaryForm{{1, 0, 0, 0, -4}}), FormIrreducibility::Irreducible);
    EXPECT_NE(binary_form_irreducibility(BinaryForm{{1, 0, 0, 0, 1}}), FormIrreducibility::Reducible);
    EXPECT_EQ(binary_form_irreducibility(BinaryForm{{3, 5}}), FormIrreducibility::Irreducible);
}

TEST(Canonical, SignNormalization)
{
    EXPECT_EQ(canonical({-1, 2, 3}), (Triple{1, -2, -3}));
    EXPECT_EQ(canonical({0, -1, 1}), (Triple{0, 1, -1}));
    EXPECT_EQ(canonical({0, 0, -5}), (Triple{0, 0, 5}));
    EXPECT_EQ(to_string(Triple{1, -1, 1}), "(1,-1,1)");
}

TEST(FindGenerators, PureQuarticExactSet)
{
    const auto s = setup_of("x^4 - 2");
    const auto search = find_generators(s, small_bounds(100));
    EXPECT_EQ(solution_set(search), (Set{{1, -1, 1}, {1, 0, 0}, {1, 1, 1}}));
    for (const auto& sol : search.solutions)
        EXPECT_EQ(abs(index_form(s, sol.xyz)), 1);
    ASSERT_EQ(search.cubic_solutions.size(), 2u);
}

TEST(FindGenerators, XFourPlusOne)
{
    const auto search = find_generators(setup_of("x^4 + 1"), small_bounds(100));
    const auto set = solution_set(search);
    EXPECT_TRUE(set.count(Triple{1, 0, 0}));
    EXPECT_TRUE(set.count(Triple{0, 0, 1}));
}

TEST(FindGenerators, NoSolutions)
{
    const auto search = find_generators(setup_of("x^4 - 2", 2), small_bounds(50));
    EXPECT_TRUE(search.cubic_solutions.empty());
    EXPECT_TRUE(search.solutions.empty());
}

TEST(FindGenerators, RejectsNonPositiveBounds)
{
    auto b = small_bounds(10);
    b.pq = 0;
    EXPECT_THROW(find_generators(setup_of("x^4 - 2"), b), InputError);
}

TEST(FindGenerators, ThreadCountDoesNotMatter)
{
    const auto s = setup_of("x^4 - x - 1", 3);
    auto b = small_bounds(60);
    b.threads = 1;
    const auto one = solution_set(find_generators(s, b));
    b.threads = 4;
    EXPECT_EQ(solution_set(find_generators(s, b)), one);
}

TEST(FindGenerators, ContainsBruteForceBox)
{
    const std::vector<std::pair<const char*, long>> cases = {
        {"x^4 - 2", 1},      {"x^4 + 1", 1},     {"x^4 - x - 1", 1}, {"x^4 - x - 1", 2},
        {"x^4 - x - 1", 3},  {"x^4 + x + 1", 1}, {"x^4 - 3", 1},     {"x^4 + 2x^2 - 1", 1},
    };
    for (const auto& [f, m] : cases) {
        const auto s = setup_of(f, m);
        const auto brute = brute_force(s, 5);
        const auto found = solution_set(find_generators(s, small_bounds(150)));
        for (const auto& t : brute)
            EXPECT_TRUE(found.count(t)) << f << " m=" << m << " missing " << to_string(t);
        for (const auto& t : found)
            EXPECT_EQ(abs(index_form(s, t)), s.i_m) << f << " " << to_string(t);
    }
}

TEST(FindGenerators, DirectSearchAgreesWithParametrization)
{
    for (const char* f : {"x^4 - x - 1", "x^4 - 2", "x^4 + x + 1"}) {
        const auto s = setup_of(f);
        const auto search = find_generators(s, small_bounds(200));
        const auto [q1, q2] = quadratic_forms(s);
        for (const auto& br : search.branches) {
            Set param_side;
            for (const auto& t : br.solutions) {
                bool in_box = true;
                for (const auto& c : t)
                    in_box = in_box && abs(c) <= 12;
                if (in_box)
                    param_side.insert(t);
            }
            const auto direct = direct_search(s, br.u, br.v, 12);
            EXPECT_EQ(Set(direct.begin(), direct.end()), param_side) << f;
        }
    }
}

TEST(IndexOfElement, PureQuartic)
{
    const auto f = parse_poly("x^4 - 2");
    const Integer dk = -2048;
    EXPECT_EQ(index_of_element(f, {1, 0, 0}, 1, dk), 1);
    EXPECT_EQ(index_of_element(f, {2, 0, 0}, 1, dk), 64);
    EXPECT_EQ(index_of_element(f, {1, 1, 1}, 1, dk), 1);
    EXPECT_EQ(index_of_element(f, {-1, -1, -1}, 1, dk), 1);
    EXPECT_EQ(index_of_element(f, {2, 0, 0}, 2, dk), 1);
    EXPECT_THROW(index_of_element(f, {0, 0, 0}, 1, dk), DomainError);
    EXPECT_THROW(index_of_element(f, {1, 0, 0}, 1, 0), DomainError);
}

TEST(IndexOfElement, MatchesRelativeIndexOracle)
{
    const auto f = parse_poly("x^4 - 2");
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            for (long z = -3; z <= 3; ++z) {
                const oracle::Z rel = oracle::relative_index(testing_support::coeffs(f), {0, x, y, z});
                if (rel == 0)
                    continue;
                EXPECT_EQ(index_of_element(f, {x, y, z}, 1, -2048), rel) << x << " " << y << " " << z;
            }
}

TEST(IndexOfElement, GeneratorsFromOracleCube)
{
    const auto f = parse_poly("x^4 - 2");
    Set gens;
    for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y)
            for (long z = -4; z <= 4; ++z)
                if (oracle::relative_index(testing_support::coeffs(f), {0, x, y, z}) == 1)
                    gens.insert(canonical({x, y, z}));
    EXPECT_EQ(gens, (Set{{1, -1, 1}, {1, 0, 0}, {1, 1, 1}}));
}

TEST(IndexOfElement, NonMonogenicOrder)
{
    for (const char* text : {"x^4 - 5", "x^4 + 4x^2 + 2", "x^4 - 17"}) {
        const auto f = parse_poly(text);
        const auto r = analyze(f);
        ASSERT_TRUE(r.field_disc.exact) << text;
        ASSERT_TRUE(r.index.has_value()) << text;
        EXPECT_EQ(index_of_element(f, {1, 0, 0}, 1, r.field_disc.value), *r.index) << text;
    }
}
