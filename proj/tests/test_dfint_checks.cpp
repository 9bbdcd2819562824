#include "swm/dfint_checks.hpp"

#include <gtest/gtest.h>

using namespace swm;

namespace
{
    const auto one = LaurentPoly2<cplx>::constant(1.0, 0);

    LaurentPoly2<cplx> linear(double rho)
    {
        LaurentPoly2<cplx> F(0);
        F.add(0, 0, 1.0);
        F.add(1, 0, 1.0);
        F.add(0, 1, -1.0 / rho);
        return F;
    }
} // namespace

TEST(Transformations, ConstantIntegrand)
{
    const auto rep = transformation_check(-0.3, -0.35, 2.5, one);
    EXPECT_EQ(rep.ratios.size(), 6u);
    EXPECT_LT(rep.max_residual, 1e-5);
    EXPECT_LT(rep.consistency_residual, 1e-5);
    EXPECT_LT(std::abs(std::abs(rep.j00) - std::abs(forrester_closed_form(-0.3, -0.35, 2.5))), 1e-6 * std::abs(rep.j00));
}

TEST(Transformations, CoincidentExponents)
{
    const auto rep = transformation_check(-0.3, -0.3, 2.0, one);
    EXPECT_LT(rep.max_residual, 1e-5);
    // b = a: the two signs of each region carry the same factor
    for (const char *r : {"10", "01", "11"})
    {
        const auto p = parse_region(std::string("+") + r), m = parse_region(std::string("-") + r);
        EXPECT_LT(std::abs(transformation_factor(p, -0.3, -0.3, 2.0) - transformation_factor(m, -0.3, -0.3, 2.0)), 1e-15);
    }
}

TEST(Transformations, SymmetricLinearIntegrand)
{
    for (const auto &p : std::vector<std::array<double, 3>>{{-0.6, -0.6, -0.8}, {-0.5, -0.55, -0.7}})
    {
        const auto F = linear(p[2]);
        EXPECT_TRUE(is_df_symmetric(F, cplx(p[2])));
        EXPECT_LT(transformation_check(p[0], p[1], p[2], F).max_residual, 1e-5);
    }
}

TEST(Series, ConvergesInOrder)
{
    const auto lo = series_check(-0.1, 0.5, 0.1, 3);
    const auto hi = series_check(-0.1, 0.5, 0.1, 8);
    EXPECT_LT(hi.complex_residual, 1e-6);
    EXPECT_LT(hi.complex_residual, lo.complex_residual);
    EXPECT_LT(series_check(-0.1, 0.5, 0.05, 8).complex_residual, 1e-6);
}

TEST(Contour, DisplayedFormsHoldWithoutDiagonalExponent)
{
    const auto rep = contour_identity_check(-0.4, -0.4 / 0.45, 0.0, 0.6);
    EXPECT_LT(rep.max_literal, 1e-6);
    EXPECT_LT(rep.max_corrected, 1e-6);
}

TEST(Contour, RederivedFormsHoldWithDiagonalExponent)
{
    for (double z : {0.55, 0.6, 0.7})
    {
        const auto rep = contour_identity_check(-0.4, -0.4 / 0.45, 0.06, z);
        EXPECT_LT(rep.max_corrected, 1e-4) << z;
        EXPECT_EQ(rep.literal.size(), 3u);
    }
    EXPECT_THROW(contour_identity_check(-0.4, 0.9, 0.06, 1.2), std::invalid_argument);
}

TEST(Probe, EntireFactorStaysBoundedNearHyperplane)
{
    // a + b -> -1 where the sine denominator vanishes
    const double a = -0.3, rho = 2.0;
    std::vector<std::pair<cplx, cplx>> path;
    for (double eps : {0.05, 0.02, 0.01, 0.005})
        path.emplace_back(a, -0.7 + eps);
    const auto rep = entire_factor_probe(one, path, rho);
    ASSERT_EQ(rep.points.size(), 4u);
    EXPECT_TRUE(rep.bounded);
    EXPECT_LT(rep.closed_form_residual, 1e-6);
    // successive differences shrink
    double prev = 1e300;
    for (size_t i = 1; i < rep.points.size(); ++i)
    {
        const double d = std::abs(rep.points[i].T - rep.points[i - 1].T);
        EXPECT_LT(d, prev);
        prev = d;
    }
}
