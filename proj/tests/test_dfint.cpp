#include "swm/dfint.hpp"

#include <gtest/gtest.h>

using namespace swm;

namespace
{
    double beta(double x, double y) { return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y); }

    double rel(cplx v, double ex) { return std::abs(std::abs(v) - std::abs(ex)) / std::abs(ex); }

    const auto one = LaurentPoly2<cplx>::constant(1.0, 0);
} // namespace

TEST(Regions, ParsingAndBoxes)
{
    const auto r = parse_region("-10");
    EXPECT_EQ(r.sign, Sign::Minus);
    EXPECT_EQ(r.i, 1);
    EXPECT_EQ(r.j, 0);
    EXPECT_EQ(r.name(), "-10");
    EXPECT_THROW(parse_region("+20"), std::invalid_argument);
    EXPECT_THROW(parse_region("00"), std::invalid_argument);
    EXPECT_EQ(all_j_regions().size(), 7u);
    EXPECT_THROW(i_box({Sign::Plus, 0, 0, RegionKind::I}, 0.5, 0.6), std::invalid_argument);
}

TEST(Separable, UnitSquare)
{
    const double a1 = -0.3, a2 = -0.45, b1 = -0.2, b2 = 0.4;
    const cplx v = df_J({Sign::Plus, 0, 0}, one, a1, a2, b1, b2, 0.0);
    const double ex = beta(a1 + 1, b1 + 1) * beta(a2 + 1, b2 + 1);
    EXPECT_LT(std::abs(v - ex), 1e-10 * ex);

    // F = u raises the u exponent by one
    const auto Fu = LaurentPoly2<cplx>::monomial(1, 0, 1.0, 0);
    const cplx w = df_J({Sign::Plus, 0, 0}, Fu, a1, a2, b1, b2, 0.0);
    EXPECT_LT(std::abs(w - beta(a1 + 2, b1 + 1) * beta(a2 + 1, b2 + 1)), 1e-10);
}

TEST(Separable, MixedRegionsGammaProducts)
{
    const double a1 = -0.3, b1 = -0.85, a2 = -0.35, b2 = -0.8;
    // v in (1, inf): int v^a (v-1)^b = B(b+1, -a-b-1); v in (-inf, 0): B(a+1, -a-b-1)
    const double above = beta(b2 + 1, -a2 - b2 - 1), below = beta(a2 + 1, -a2 - b2 - 1);
    const double unit = beta(a1 + 1, b1 + 1);
    EXPECT_LT(rel(df_J({Sign::Plus, 0, 1}, one, a1, a2, b1, b2, 0.0), unit * above), 1e-9);
    EXPECT_LT(rel(df_J({Sign::Minus, 0, 1}, one, a1, a2, b1, b2, 0.0), unit * below), 1e-9);
    for (const auto &reg : all_j_regions())
    {
        if (reg.i == reg.j)
            continue;
        EXPECT_LT(rel(df_J(reg, one, a1, a2, b1, b2, 0.0), std::abs(beta_degeneration(reg, a1, a2, b1, b2))), 1e-9)
            << reg.name();
    }
    EXPECT_THROW(beta_degeneration({Sign::Plus, 1, 1}, a1, a2, b1, b2), std::invalid_argument);
}

TEST(Diagonal, SelbergTwoVariables)
{
    // |u - v|^{-2g} on both sides is Selberg's integral with exponent -g
    const double a = -0.3, b = -0.4, g = 0.2;
    const double al = a + 1, be = b + 1, gs = -g;
    const double S = std::tgamma(al) * std::tgamma(be) / std::tgamma(al + be + gs) * std::tgamma(al + gs) *
                     std::tgamma(be + gs) * std::tgamma(1 + 2 * gs) / (std::tgamma(al + be + 2 * gs) * std::tgamma(1 + gs));
    BoxIntegrand in;
    in.ufac = {{0.0, a}, {1.0, b}};
    in.vfac = {{0.0, a}, {1.0, b}};
    in.gamma = g;
    in.apply_i0 = false;
    EXPECT_LT(rel(df_box(in), S), 1e-7);

    // with the i0 prescription one half picks up exp(-2 pi i g)
    in.apply_i0 = true;
    EXPECT_LT(rel(df_box(in), S * std::cos(M_PI * g)), 1e-7);
}

TEST(Forrester, ClosedFormAgainstRealGamma)
{
    const double a = -0.3, b = -0.35, rho = 2.5;
    const double r = 1 / rho, ap = -a * r, bp = -b * r;
    const double ex = r * r * std::sin(M_PI * (a + b)) / std::sin(M_PI * a) * std::tgamma(r - 1) / std::tgamma(r) *
                      std::tgamma(1 + b) * std::tgamma(1 - a - b) / std::tgamma(-a) * std::tgamma(ap) * std::tgamma(bp) /
                      std::tgamma(1 + ap + bp);
    EXPECT_LT(std::abs(forrester_closed_form(a, b, rho) - ex), 1e-12 * std::abs(ex));
    EXPECT_LT(std::abs(std::abs(forrester_closed_form(a, b, rho)) - std::abs(forrester_closed_form(b, a, rho))),
              1e-12 * std::abs(ex));
    EXPECT_THROW(forrester_closed_form(a, b, 0.0), PoleError);
}

TEST(Forrester, QuadratureMatches)
{
    for (const auto &p : std::vector<std::array<double, 3>>{{-0.3, -0.3, 2.0}, {-0.25, -0.25, 4.0}, {-0.3, -0.35, 2.5}})
    {
        const cplx v = df_J_constrained({Sign::Plus, 0, 0}, one, p[0], p[1], p[2]);
        EXPECT_LT(rel(v, std::abs(forrester_closed_form(p[0], p[1], p[2]))), 1e-6);
    }
    // a <-> b
    const cplx x = df_J_constrained({Sign::Plus, 0, 0}, one, -0.3, -0.35, 2.5);
    const cplx y = df_J_constrained({Sign::Plus, 0, 0}, one, -0.35, -0.3, 2.5);
    EXPECT_LT(rel(x, std::abs(y)), 1e-6);
}

TEST(PointConfiguration, SeparableAndHomogeneous)
{
    DFParams p;
    p.a1 = -0.3;
    p.b1 = -0.2;
    p.a2 = -0.4;
    p.b2 = 0.3;
    p.gamma = 0.0;
    const double z1 = 1.0, z2 = 0.6;
    const cplx v = df_I({Sign::Plus, 0, 0, RegionKind::I}, {}, p, z1, z2);
    const double ex = std::pow(z2, -0.3 - 0.2 + 1) * beta(0.7, 0.8) * std::pow(z2, -0.4 + 0.3 + 1) * beta(0.6, 1.3);
    EXPECT_LT(std::abs(v - ex), 1e-10 * ex);

    DFParams q = p;
    q.c1 = -0.15;
    q.c2 = 0.25;
    q.gamma = 0.2;
    const double deg = -0.3 - 0.2 - 0.15 - 0.4 + 0.3 + 0.25 + 2 - 0.4;
    for (const char *reg : {"+00", "-00"})
    {
        const auto R = parse_region(reg, RegionKind::I);
        const cplx s1 = df_I(R, {}, q, 1.0, 0.6), s2 = df_I(R, {}, q, 2.0, 1.2);
        EXPECT_LT(std::abs(s2 - std::pow(2.0, deg) * s1), 1e-7 * std::abs(s2)) << reg;
    }
    EXPECT_THROW(df_I({Sign::Plus, 0, 0, RegionKind::I}, {}, p, 1.0, 0.4), std::invalid_argument);
    EXPECT_NO_THROW(df_I({Sign::Plus, 0, 0, RegionKind::I}, {}, p, 1.0, 0.4, {}, false));
}

TEST(Trig, PrefactorIdentities)
{
    const Pair a{0.13, -0.27}, b{-0.41, 0.36};
    const cplx g = 1.0;
    EXPECT_LT(std::abs(trig_c(Sign::Minus, 1, 1, a, b, g) - trig_c(Sign::Plus, 1, 1, b, a, g)), 1e-15);
    EXPECT_LT(std::abs(trig_c(Sign::Plus, 0, 0, a, b, g) - trig_c(Sign::Plus, 0, 0, b, a, g)), 1e-14);
    // e(1/2) = 2 and e(n) = 0 make the prefactor vanish on integer exponents
    const Pair ai{1.0, -0.27};
    EXPECT_LT(std::abs(trig_c(Sign::Plus, 0, 1, ai, b, g)), 1e-15);
    const Pair h{0.5, 0.5};
    EXPECT_LT(std::abs(trig_c(Sign::Plus, 0, 0, h, h, 0.0) - 16.0 * frak_e(1.0) * frak_e(1.0)), 1e-14);
    EXPECT_THROW(trig_d(Sign::Plus, 1, 1, a, b, a, g), std::invalid_argument);
}

TEST(SingularLocus, Detection)
{
    DFParams p;
    p.a1 = -0.3;
    p.a2 = -0.2;
    p.b1 = -0.45;
    p.b2 = -0.15;
    p.gamma = 1.0;
    EXPECT_FALSE(on_singular_locus(p).on_locus);
    p.a1 = -1.0;
    const auto r = on_singular_locus(p);
    EXPECT_TRUE(r.on_locus);
    EXPECT_NE(std::find(r.violated.begin(), r.violated.end(), "H(a,b):a1"), r.violated.end());
    // a1 + b1 = -1
    p.a1 = -0.55;
    EXPECT_TRUE(on_singular_locus(p).on_locus);
    const auto full = DFParams::constrained_full(-0.25, 2.0);
    EXPECT_TRUE(full.has_c);
    EXPECT_THROW(DFParams::constrained(-0.3, -0.3, 1.0), std::invalid_argument);
}

TEST(Taylor, LowOrderCoefficients)
{
    const cplx a = -0.3, ap = 0.7;
    const auto p0 = taylor_factor(TaylorVariant::Plus0, 1, a, ap);
    EXPECT_EQ(p0.coeff(1, 0), -a);
    EXPECT_EQ(p0.coeff(0, 1), -ap);
    const auto p1 = taylor_factor(TaylorVariant::Plus1, 1, a, ap);
    EXPECT_EQ(p1.coeff(-1, 0), -a);
    const auto m0 = taylor_factor(TaylorVariant::Minus0, 1, a, ap);
    EXPECT_EQ(m0.center(), 1);
    EXPECT_EQ(m0.coeff(1, 0), a);
    // [z^2] (1 - zu)^a: binom(a, 2) u^2
    const auto p2 = taylor_factor(TaylorVariant::Plus0, 2, a, ap);
    EXPECT_LT(std::abs(p2.coeff(2, 0) - a * (a - 1.0) / 2.0), 1e-15);
    EXPECT_LT(std::abs(p2.coeff(1, 1) - a * ap), 1e-15);

    const auto g0 = taylor_factor(TaylorVariant::MixedPlus01, 0, a, ap);
    EXPECT_EQ(g0.coeff(0, 0), cplx(1.0));
    const auto g1 = taylor_factor(TaylorVariant::MixedPlus01, 1, a, ap);
    EXPECT_EQ(g1.coeff(1, 0), -a);
    EXPECT_EQ(g1.coeff(0, -1), -ap);
    EXPECT_EQ(g1.coeff(1, -1), cplx(2.0));
    EXPECT_THROW(taylor_factor(TaylorVariant::Plus0, -1, a, ap), std::invalid_argument);
}

TEST(Errors, DivergentExponents)
{
    EXPECT_THROW(df_J({Sign::Plus, 0, 0}, one, -1.2, -0.3, -0.2, -0.2, 0.0), ConvergenceError);
    EXPECT_THROW(df_J({Sign::Plus, 0, 0}, LaurentPoly2<cplx>::constant(1.0, 2), -0.3, -0.3, -0.2, -0.2, 0.0),
                 std::invalid_argument);
}
