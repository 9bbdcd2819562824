#include "swm/chebyshev.hpp"
#include "swm/laurent.hpp"
#include "swm/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace swm;

TEST(Rational, AddSubtractRoundTrip)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-(1L << 40), 1L << 40), den(1, 1L << 40);
    for (int t = 0; t < 500; ++t)
    {
        const Rational x = make_rational(num(rng), den(rng)), y = make_rational(num(rng), den(rng));
        Rational z = x + y - y;
        EXPECT_EQ(z, x);
        EXPECT_GT(x.get_den(), 0);
        EXPECT_EQ(gcd(x.get_num(), x.get_den()), 1);
    }
}

TEST(Chebyshev, SmallDegreesInMonomialForm)
{
    EXPECT_EQ(chebyshev_u(0).to_monomial(), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(chebyshev_u(2).to_monomial(), (std::vector<std::int64_t>{-1, 0, 1}));
    EXPECT_EQ(chebyshev_u(4).to_monomial(), (std::vector<std::int64_t>{1, 0, -3, 0, 1}));
    for (int n = 0; n < 30; ++n)
        EXPECT_EQ(chebyshev_u(n).to_monomial().back(), 1);
}

TEST(Chebyshev, TrigonometricIdentity)
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> th(0.05, 3.09);
    for (int t = 0; t < 100; ++t)
    {
        const double a = th(rng);
        for (int n : {0, 1, 5, 12})
            EXPECT_NEAR(chebyshev_u(n).evaluate(2 * std::cos(a)) * std::sin(a), std::sin((n + 1) * a), 1e-12);
    }
}

TEST(Chebyshev, ProductLinearization)
{
    EXPECT_EQ(chebyshev_product(0, 5), ChebyshevPoly::basis(5));
    EXPECT_EQ(chebyshev_product(1, 1), ChebyshevPoly::basis(2) + ChebyshevPoly::basis(0));
    EXPECT_EQ(chebyshev_product(2, 2), ChebyshevPoly::basis(4) + ChebyshevPoly::basis(2) + ChebyshevPoly::basis(0));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> th(0.05, 3.09);
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k)
        {
            const ChebyshevPoly p = chebyshev_product(j, k);
            int terms = 0;
            for (int d = 0; d <= p.degree(); ++d)
            {
                EXPECT_TRUE(p[d] == 0 || p[d] == 1);
                terms += p[d] != 0;
            }
            EXPECT_EQ(terms, std::min(j, k) + 1);
            const double A = 2 * std::cos(th(rng));
            EXPECT_NEAR(p.evaluate(A), chebyshev_u(j).evaluate(A) * chebyshev_u(k).evaluate(A), 1e-12);
        }
}

TEST(Chebyshev, OverflowIsDetected)
{
    ChebyshevPoly big = ChebyshevPoly::basis(0, std::numeric_limits<std::int64_t>::max());
    EXPECT_THROW(big + big, std::overflow_error);
}

TEST(Laurent, RestrictDiagonal)
{
    for (int x : {0, 1})
    {
        const auto F = LaurentPoly2<Rational>::monomial(1, 1, Rational(1), x);
        const auto d = laurent_restrict_diagonal(F);
        EXPECT_EQ(d.coeff(2), 1);
        EXPECT_EQ(d.terms().size(), 1u);

        const Rational rho(3, 7);
        const auto G = LaurentPoly2<Rational>::monomial(4, 0, Rational(1), x) +
                       LaurentPoly2<Rational>::monomial(0, 4, -1 / rho, x);
        EXPECT_EQ(laurent_restrict_diagonal(G).coeff(4), 1 - 1 / rho);

        const auto one = laurent_restrict_diagonal(LaurentPoly2<Rational>::constant(Rational(1), x));
        EXPECT_EQ(one.coeff(0), 1);
    }
}

TEST(Laurent, DfSymmetryExamples)
{
    const Rational rho(5, 3);
    for (int x : {0, 1})
        for (int n : {-2, -1, 1, 3})
        {
            const auto F = LaurentPoly2<Rational>::monomial(n, 0, Rational(1), x) +
                           LaurentPoly2<Rational>::monomial(0, n, -1 / rho, x);
            EXPECT_TRUE(is_df_symmetric(F, rho));
        }
    const auto uv = LaurentPoly2<Rational>::monomial(1, 0, Rational(1)) + LaurentPoly2<Rational>::monomial(0, 1, Rational(1));
    EXPECT_FALSE(is_df_symmetric(uv, rho));
    EXPECT_TRUE(is_df_symmetric(LaurentPoly2<Rational>::constant(Rational(1)), rho));
}

TEST(Laurent, CanonicalOrderAndArithmetic)
{
    auto F = LaurentPoly2<Rational>::monomial(2, -1, Rational(3)) + LaurentPoly2<Rational>::monomial(-1, 2, Rational(1));
    std::vector<std::pair<int, int>> keys;
    for (const auto &[k, c] : F.terms())
        keys.push_back(k);
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_TRUE((F - F).terms().empty());
    EXPECT_EQ((F * F).coeff(1, 1), 6);
    EXPECT_THROW(F + LaurentPoly2<Rational>::constant(Rational(1), 1), std::invalid_argument);
}
