#include "monogen/monogenity.hpp"

#include "monogen/arith.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace monogen;
using testing_support::random_poly;

namespace {

Integer index_from_ledger(const MonogenityReport& r)
{
    Integer ind = 1;
    for (const auto& row : r.ledger)
        ind *= pow(row.p, static_cast<unsigned long>(row.nu_index.value));
    return ind;
}

} // namespace

TEST(Analyze, CubicWithPrimeDiscriminant)
{
    const auto r = analyze(parse_poly("x^3 - x - 1"));
    EXPECT_EQ(r.verdict, Verdict::MonogenicPoly);
    EXPECT_EQ(r.disc, -23);
    ASSERT_EQ(r.ledger.size(), 1u);
    EXPECT_EQ(r.ledger[0].method, Method::DiscCoprime);
    EXPECT_EQ(r.ledger[0].nu_index, (IndexValuation{IndexValuation::Kind::Exact, 0}));
    EXPECT_EQ(*r.index, 1);
    EXPECT_TRUE(r.field_disc.exact);
    EXPECT_EQ(r.field_disc.value, -23);
    EXPECT_EQ(r.irreducibility.status, Irreducibility::Certified);
}

TEST(Analyze, SqrtFive)
{
    const auto r = analyze(parse_poly("x^2 - 5"));
    EXPECT_EQ(r.verdict, Verdict::NotMonogenicPoly);
    EXPECT_EQ(r.witnesses, (std::vector<Integer>{2}));
    const auto* row = r.find(2);
    ASSERT_NE(row, nullptr);
    EXPECT_EQ(row->nu_index, (IndexValuation{IndexValuation::Kind::Exact, 1}));
    EXPECT_EQ(row->method, Method::Ore);
    EXPECT_EQ(r.field_disc.value, 5);
    EXPECT_TRUE(r.common_index_divisors.empty());
}

TEST(Analyze, FieldDiscriminantExamples)
{
    EXPECT_EQ(analyze(parse_poly("x^2 - 2")).field_disc.value, 8);
    const auto q = analyze(parse_poly("x^4 - 2"));
    EXPECT_EQ(q.field_disc.value, -2048);
    EXPECT_EQ(q.verdict, Verdict::MonogenicPoly);
}

TEST(Analyze, JonesWhiteSextic)
{
    const auto r = analyze(parse_poly("x^6 + 2x^2 + 2"));
    EXPECT_EQ(r.verdict, Verdict::MonogenicPoly);
    EXPECT_EQ(r.irreducibility.status, Irreducibility::Certified);
}

TEST(Analyze, DedekindCubicCommonIndexDivisor)
{
    const auto r = analyze(parse_poly("x^3 - x^2 - 2x - 8"));
    EXPECT_EQ(r.verdict, Verdict::NotMonogenicPoly);
    EXPECT_EQ(r.exact_valuation(2), 1);
    EXPECT_EQ(r.find(2)->splitting->to_string(), "[(1,1), (1,1), (1,1)]");
    EXPECT_EQ(r.common_index_divisors, (std::vector<Integer>{2}));
    EXPECT_EQ(r.field_disc.value, -503);
}

TEST(Analyze, InputErrors)
{
    EXPECT_THROW(analyze(parse_poly("2x^2 + 1")), InputError);
    EXPECT_THROW(analyze(parse_poly("x + 1")), InputError);
    EXPECT_THROW(analyze(parse_poly("x^2 - 4")), InputError);
    EXPECT_THROW(analyze(parse_poly("x^3 - 1")), InputError);
    EXPECT_THROW(analyze(parse_poly("x^4 + 2x^2 + 1")), InputError);
}

TEST(Analyze, IrregularPrimeIsNotMonogenicWithLowerBound)
{
    const auto r = analyze(parse_poly("x^2 + 12"));
    EXPECT_EQ(r.verdict, Verdict::NotMonogenicPoly);
    const auto* row = r.find(2);
    ASSERT_NE(row, nullptr);
    EXPECT_EQ(row->nu_index.kind, IndexValuation::Kind::LowerBound);
    EXPECT_FALSE(r.field_disc.exact);
    EXPECT_FALSE(r.index);
}

TEST(Analyze, UnfactoredSquarefreeCofactorStillDecides)
{
    AnalysisConfig cfg;
    cfg.factor.trial_limit = 10;
    cfg.factor.rho_iterations = 0;
    // D = -4 * 1009 * 1013 style discriminant: x^2 + 1009*1013
    const auto r = analyze(parse_poly("x^2 + 1022117"), cfg);
    EXPECT_NE(r.verdict, Verdict::NotMonogenicPoly);
}

TEST(Analyze, DiscriminantIdentityOnRandomPolynomials)
{
    std::mt19937_64 rng(73);
    int resolved = 0;
    for (int i = 0; i < 300; ++i) {
        const IntPoly f = random_poly(rng, 2 + static_cast<unsigned>(rng() % 4), 15, true);
        MonogenityReport r;
        try {
            r = analyze(f);
        } catch (const InputError&) {
            continue;
        }
        if (r.verdict == Verdict::MonogenicPoly) {
            for (const auto& row : r.ledger)
                EXPECT_EQ(row.nu_index.value, 0);
        }
        for (const auto& q : r.common_index_divisors)
            EXPECT_LT(q, f.degree());
        if (!r.index || !r.field_disc.exact)
            continue;
        ++resolved;
        EXPECT_EQ(*r.index, index_from_ledger(r));
        EXPECT_EQ(r.disc, (*r.index) * (*r.index) * r.field_disc.value) << f.to_string();
        EXPECT_EQ(sgn(r.disc), sgn(r.field_disc.value));
    }
    EXPECT_GT(resolved, 150);
}

TEST(Analyze, ValuationsMatchIndexCount)
{
    std::mt19937_64 rng(79);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 60; ++i) {
        const IntPoly f = random_poly(rng, 3, 10, true);
        MonogenityReport r;
        try {
            r = analyze(f);
        } catch (const InputError&) {
            continue;
        }
        for (const auto& row : r.ledger) {
            if (row.p > 5 || !row.nu_index.exact())
                continue;
            const int v = oracle::index_valuation_by_count(testing_support::coeffs(f), to_u64(row.p), 20000);
            if (v < 0)
                continue;
            ++checked;
            EXPECT_EQ(row.nu_index.value, v) << f.to_string() << " p=" << row.p;
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(Irreducibility, Screen)
{
    const auto a = screen_irreducibility(parse_poly("x^4 + 1"), discriminant(parse_poly("x^4 + 1")));
    EXPECT_FALSE(a.reducible);
    EXPECT_EQ(a.status, Irreducibility::Attested);  // reducible mod every prime

    const auto b = screen_irreducibility(parse_poly("x^5 - x - 1"), discriminant(parse_poly("x^5 - x - 1")));
    EXPECT_EQ(b.status, Irreducibility::Certified);

    const auto c = screen_irreducibility(parse_poly("x^3 - 8"), discriminant(parse_poly("x^3 - 8")));
    EXPECT_TRUE(c.reducible);
}

TEST(CountIrreducibles, Examples)
{
    EXPECT_EQ(count_irreducibles(2, 1), 2);
    EXPECT_EQ(count_irreducibles(2, 2), 1);
    EXPECT_EQ(count_irreducibles(3, 1), 3);
    EXPECT_EQ(count_irreducibles(2, 4), 3);
    EXPECT_EQ(count_irreducibles(3, 6), 116);
}

TEST(CountIrreducibles, MatchesEnumeration)
{
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned d = 1; d <= 4; ++d) {
            if (std::pow(p, d) > 700)
                continue;
            std::uint64_t count = 0;
            std::vector<std::uint64_t> c(d + 1, 0);
            c[d] = 1;
            while (true) {
                count += oracle::irreducible_mod_p(c, p);
                std::size_t i = 0;
                while (i < d && ++c[i] == p)
                    c[i++] = 0;
                if (i == d)
                    break;
            }
            EXPECT_EQ(count_irreducibles(from_u64(p), d), from_u64(count)) << p << " " << d;
        }
}

TEST(CommonIndexDivisor, Examples)
{
    EXPECT_TRUE(common_index_divisor(SplittingType{{{1, 1}, {1, 1}, {1, 1}}}, 2, 3));
    EXPECT_FALSE(common_index_divisor(SplittingType{{{1, 2}}}, 2, 2));
    EXPECT_FALSE(common_index_divisor(SplittingType{{{1, 1}, {1, 1}, {1, 1}}}, 3, 3));
    // two residue-degree-2 primes over 2 need two irreducible quadratics; only one exists
    EXPECT_TRUE(common_index_divisor(SplittingType{{{1, 2}, {1, 2}}}, 2, 4));
    EXPECT_FALSE(common_index_divisor(SplittingType{{{1, 1}, {1, 1}}}, 2, 2));
}
