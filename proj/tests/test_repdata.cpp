#include "swm/repdata.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace swm;

namespace
{
    // Closed formula evaluated directly in doubles.
    double h_double(long r, long s, int m)
    {
        const double p = 2 * m + 1;
        return (r * r - 1) * p / 8 - (r * s - 1) / 4.0 + (s * s - 1) / (8 * p);
    }
} // namespace

TEST(CentralCharge, Values)
{
    EXPECT_EQ(central_charge(1), Rational(-5, 2));
    // 15/2 - 3(5 + 1/5) = 15/2 - 78/5
    EXPECT_EQ(central_charge(2), Rational(-81, 10));
    for (int m = 1; m <= 20; ++m)
    {
        const double p = 2 * m + 1;
        EXPECT_NEAR(to_double(central_charge(m)), 7.5 - 3 * (p + 1 / p), 1e-12);
    }
    EXPECT_THROW(central_charge(0), std::invalid_argument);
}

TEST(ConformalWeight, Examples)
{
    for (int m = 1; m <= 6; ++m)
    {
        EXPECT_EQ(conformal_weight(1, 1, 0, m), 0);
        EXPECT_EQ(conformal_weight(3, 1, 0, m), Rational(4 * m + 1, 2));
        EXPECT_EQ(conformal_weight(2, 2, 0, m), make_rational(3 * (2 * m + 1), 8) - make_rational(3, 4) + make_rational(3, 8 * (2 * m + 1)));
    }
    EXPECT_EQ(conformal_weight(2, 2, 0, 1), Rational(1, 2));
}

TEST(ConformalWeight, ShiftLawAndSymmetry)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-12, 12), dm(1, 9);
    for (int t = 0; t < 200; ++t)
    {
        const int r = d(rng), s = d(rng), n = d(rng), m = dm(rng);
        EXPECT_EQ(conformal_weight(r, s, n, m), conformal_weight(r - n, s, 0, m));
        EXPECT_EQ(conformal_weight(r, s, 0, m), conformal_weight(-r, -s, 0, m));
        EXPECT_NEAR(to_double(conformal_weight(r, s, 0, m)), h_double(r, s, m), 1e-9);
    }
}

TEST(Labels, Bounds)
{
    EXPECT_THROW(ModuleLabel::X(0, 2), std::invalid_argument);
    EXPECT_THROW(ModuleLabel::X(6, 2), std::invalid_argument);
    EXPECT_THROW(ModuleLabel::P(5, 2), std::invalid_argument);
    EXPECT_NO_THROW(ModuleLabel::P(4, 2));
    EXPECT_EQ(parse_label("P_3", 2), ModuleLabel::P(3, 2));
    EXPECT_THROW(parse_label("Y_1", 2), std::invalid_argument);
    for (int m = 1; m <= 4; ++m)
        for (int i = 0; i <= 4 * m; ++i)
            EXPECT_EQ(label_at(i, m).index(), i);
}

TEST(MinWeight, Examples)
{
    for (int m = 1; m <= 5; ++m)
    {
        EXPECT_EQ(min_weight(ModuleLabel::X(1, m)), 0);
        EXPECT_EQ(min_weight(ModuleLabel::X(2 * m + 1, m)), conformal_weight(1, 2 * m + 1, 0, m));
        EXPECT_THROW(min_weight(ModuleLabel::P(1, m)), UnsupportedLabel);
    }
    EXPECT_EQ(min_weight(ModuleLabel::X(2, 1)), Rational(1, 2));
}

TEST(Decomposition, Examples)
{
    const auto d3 = ns_decomposition(ModuleLabel::X(3, 1), 1);
    ASSERT_EQ(d3.size(), 2u);
    EXPECT_EQ(d3[0].multiplicity, 1);
    EXPECT_EQ(d3[0].weight, Rational(-1, 6));
    EXPECT_EQ(d3[1].multiplicity, 3);
    EXPECT_EQ(d3[1].weight, Rational(4, 3));
    // h_{1,3} and h_{3,3} at m = 1 straight from the doubles formula
    EXPECT_NEAR(to_double(d3[0].weight), h_double(1, 3, 1), 1e-12);
    EXPECT_NEAR(to_double(d3[1].weight), h_double(3, 3, 1), 1e-12);

    const auto d2 = ns_decomposition(ModuleLabel::X(2, 1), 1);
    ASSERT_EQ(d2.size(), 1u);
    EXPECT_EQ(d2[0].multiplicity, 2);
    EXPECT_EQ(d2[0].weight, Rational(1, 2));

    for (int m = 1; m <= 4; ++m)
        for (int s = 1; s <= 2 * m + 1; s += 2)
        {
            const auto d = ns_decomposition(ModuleLabel::X(s, m), 0);
            ASSERT_EQ(d.size(), 1u);
            EXPECT_EQ(d[0].multiplicity, 1);
            EXPECT_EQ(d[0].weight, min_weight(ModuleLabel::X(s, m)));
        }
}

TEST(Blocks, Assignment)
{
    for (int m = 1; m <= 6; ++m)
    {
        EXPECT_EQ(block_of(ModuleLabel::X(1, m)), 1);
        EXPECT_EQ(block_of(ModuleLabel::X(2 * m, m)), 1);
        EXPECT_EQ(block_of(ModuleLabel::X(2 * m + 1, m)), m + 1);
        EXPECT_EQ(block_of(ModuleLabel::P(1, m)), 1);
        for (int i = 0; i < m; ++i)
            EXPECT_EQ(block_of(ModuleLabel::X(2 * i + 1, m)), block_of(ModuleLabel::X(2 * (m - i), m)));
        for (int i = 1; i <= m; ++i)
            EXPECT_EQ(block_of(ModuleLabel::P(2 * i, m)), m - i + 1);
    }
}

TEST(Zhu, Dimension)
{
    EXPECT_EQ(zhu_dimension(1), 7);
    EXPECT_EQ(zhu_dimension(2), 13);
    EXPECT_EQ(zhu_dimension(10), 61);
}

TEST(RiemannScheme, ExponentsFromWeights)
{
    const auto s1 = riemann_exponents(1);
    EXPECT_EQ(s1.at0, (std::vector<Rational>{Rational(1, 3), Rational(2), Rational(-2, 3), Rational(-1)}));
    EXPECT_EQ(s1.atinf, (std::vector<Rational>{Rational(0), Rational(1, 3), Rational(4, 3), Rational(3)}));
    for (int m = 1; m <= 10; ++m)
    {
        const auto s = riemann_exponents(m);
        const auto h22 = conformal_weight(2, 2, 0, m);
        // rho_{1,1} = h_{3,3} - 2 h_{2,2}, rho_{0,1} = h_{3,1} + 1/2 - 2 h_{2,2}
        EXPECT_EQ(s.at0[0], conformal_weight(3, 3, 0, m) - 2 * h22);
        EXPECT_EQ(s.at0[1], conformal_weight(3, 1, 0, m) + Rational(1, 2) - 2 * h22);
        EXPECT_EQ(s.at0, s.at1);
        Rational sum = 0;
        for (const auto &x : s.all())
            sum += x;
        EXPECT_EQ(sum, 6);
        EXPECT_EQ(s.at0[0] - s.at0[2], 2 * m - 1);
        EXPECT_EQ(s.at0[1] - s.at0[3], 2 * m + 1);
    }
}
