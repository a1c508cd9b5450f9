#include "monogen/dedekind.hpp"

#include "monogen/arith.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace monogen;
using testing_support::random_poly;

TEST(Dedekind, SqrtFiveAtTwo)
{
    const auto r = dedekind_test(parse_poly("x^2 - 5"), 2);
    EXPECT_TRUE(r.divides_index);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->to_string(), "x + 1");
    EXPECT_EQ(r.m, parse_poly("-x - 3"));
    EXPECT_FALSE(r.splitting);
}

TEST(Dedekind, SqrtTwoAtTwo)
{
    const auto r = dedekind_test(parse_poly("x^2 - 2"), 2);
    EXPECT_FALSE(r.divides_index);
    EXPECT_FALSE(r.witness);
    ASSERT_TRUE(r.splitting);
    EXPECT_EQ(r.splitting->to_string(), "[(2,1)]");
    EXPECT_EQ(r.m, IntPoly({-1}));
}

TEST(Dedekind, SquarefreeReduction)
{
    const auto r = dedekind_test(parse_poly("x^3 - x - 1"), 5);
    EXPECT_FALSE(r.divides_index);
    ASSERT_TRUE(r.splitting);
    EXPECT_EQ(r.splitting->degree_sum(), 3u);
}

TEST(Dedekind, DedekindCubic)
{
    const auto r = dedekind_test(parse_poly("x^3 - x^2 - 2x - 8"), 2);
    EXPECT_TRUE(r.divides_index);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->to_string(), "x");
}

TEST(Dedekind, NonMonicRejected)
{
    EXPECT_THROW(dedekind_test(parse_poly("2x^2 + 1"), 3), DomainError);
    EXPECT_THROW(dedekind_test(parse_poly("x^2 + 1"), 9), InputError);
}

TEST(Dedekind, PrimesOutsideDiscriminantNeverDivide)
{
    std::mt19937_64 rng(43);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 400; ++i) {
        const IntPoly f = random_poly(rng, 2 + static_cast<unsigned>(rng() % 5), 20, true);
        const Integer d = discriminant(f);
        const std::uint64_t p = primes[rng() % 6];
        if (d == 0 || divisible(d, from_u64(p)))
            continue;
        const auto r = dedekind_test(f, from_u64(p));
        EXPECT_FALSE(r.divides_index) << f.to_string() << " p=" << p;
        ASSERT_TRUE(r.splitting);
        EXPECT_EQ(r.splitting->degree_sum(), static_cast<unsigned>(f.degree()));
        for (const auto& s : r.splitting->primes)
            EXPECT_EQ(s.e, 1u);
    }
}

TEST(Dedekind, EisensteinNeverDivides)
{
    std::mt19937_64 rng(47);
    const long primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 200; ++i) {
        const long p = primes[rng() % 4];
        const unsigned n = 2 + static_cast<unsigned>(rng() % 5);
        std::vector<Integer> c(n + 1);
        for (unsigned k = 1; k < n; ++k)
            c[k] = p * (static_cast<long>(rng() % 11) - 5);
        long a0 = p * (1 + static_cast<long>(rng() % 7));
        if (a0 % (p * p) == 0)
            a0 += p;
        c[0] = rng() % 2 ? a0 : -a0;
        c[n] = 1;
        const IntPoly f(c);
        const auto r = dedekind_test(f, p);
        EXPECT_FALSE(r.divides_index) << f.to_string();
        ASSERT_TRUE(r.splitting);
        EXPECT_EQ(r.splitting->to_string(), "[(" + std::to_string(n) + ",1)]");
    }
}

TEST(Dedekind, AgreesWithIndexCount)
{
    // p | ind(f) exactly when (1/p) Z[xi] contains a non-obvious integer.
    std::mt19937_64 rng(53);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 120; ++i) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 2);
        const IntPoly f = random_poly(rng, n, 12, true);
        const Integer d = discriminant(f);
        if (d == 0)
            continue;
        for (unsigned p : {2u, 3u}) {
            if (!divisible(d, p * p))
                continue;
            const int v = oracle::index_valuation_by_count(testing_support::coeffs(f), p, 20000);
            if (v < 0)
                continue;
            ++checked;
            EXPECT_EQ(dedekind_test(f, p).divides_index, v > 0) << f.to_string() << " p=" << p;
        }
    }
    EXPECT_GT(checked, 30);
}

TEST(SplittingType, CanonicalFormatting)
{
    SplittingType st{{{2, 1}, {1, 2}, {1, 1}}};
    st.canonicalize();
    EXPECT_EQ(st.to_string(), "[(1,1), (1,2), (2,1)]");
    EXPECT_EQ(st.degree_sum(), 5u);
}
