#include "swm/fusion.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <complex>

using namespace swm;

namespace
{
    FusionElement make(int m, std::initializer_list<std::pair<ModuleLabel, int>> parts)
    {
        FusionElement e(m);
        for (const auto &[L, k] : parts)
            e[L] += k;
        return e;
    }

    // Complex roots of a monomial-basis integer polynomial (companion matrix).
    std::vector<std::complex<double>> roots(const std::vector<std::int64_t> &c)
    {
        const int n = static_cast<int>(c.size()) - 1;
        Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i)
            C(0, i) = -static_cast<double>(c[n - 1 - i]) / static_cast<double>(c[n]);
        for (int i = 1; i < n; ++i)
            C(i, i - 1) = 1;
        Eigen::EigenSolver<Eigen::MatrixXd> es(C);
        std::vector<std::complex<double>> out;
        for (int i = 0; i < n; ++i)
            out.push_back(es.eigenvalues()(i));
        return out;
    }

    // reduce(p) and p agree at every root of the ideal generator
    void expect_same_class(const ChebyshevPoly &p, const ChebyshevPoly &red, const ChebyshevPoly &gen)
    {
        for (const auto &z : roots(gen.to_monomial()))
        {
            const auto a = p.evaluate_as(z), b = red.evaluate_as(z);
            EXPECT_LT(std::abs(a - b), 1e-7 * (1 + std::abs(a)));
        }
    }

    const auto X = [](int s, int m) { return ModuleLabel::X(s, m); };
    const auto P = [](int s, int m) { return ModuleLabel::P(s, m); };
} // namespace

TEST(ClassPolynomial, Examples)
{
    EXPECT_EQ(class_polynomial(X(1, 2)), ChebyshevPoly::basis(0));
    EXPECT_EQ(class_polynomial(X(3, 2)), ChebyshevPoly::basis(2));
    EXPECT_EQ(class_polynomial(P(1, 1)), ChebyshevPoly::basis(3) + ChebyshevPoly::basis(1));
}

TEST(ReduceP, ExamplesAndRootOracle)
{
    for (int m = 1; m <= 4; ++m)
    {
        EXPECT_EQ(reduce_P(ChebyshevPoly::basis(4 * m + 1), m), ChebyshevPoly::basis(2 * m, 2));
        const ChebyshevPoly low = ChebyshevPoly::basis(4 * m, 3) + ChebyshevPoly::basis(1, -2);
        EXPECT_EQ(reduce_P(low, m), low);
        const ChebyshevPoly gen = ChebyshevPoly::basis(4 * m + 1) + ChebyshevPoly::basis(2 * m, -2);
        for (int n = 4 * m + 1; n <= 4 * m + 9; ++n)
        {
            const auto red = reduce_P(ChebyshevPoly::basis(n), m);
            EXPECT_LE(red.degree(), 4 * m);
            expect_same_class(ChebyshevPoly::basis(n), red, gen);
        }
    }
    // hand reduction at m = 1: U_6 = A U_5 - U_4 == 2 A U_2 - U_4 = 2(U_3 + U_1) - U_4
    EXPECT_EQ(reduce_P(ChebyshevPoly::basis(6), 1),
              ChebyshevPoly::basis(3, 2) + ChebyshevPoly::basis(1, 2) + ChebyshevPoly::basis(4, -1));
}

TEST(FromReduced, Examples)
{
    EXPECT_EQ(from_reduced(ChebyshevPoly::basis(0), 2), FusionElement::of(X(1, 2)));
    for (int m = 1; m <= 4; ++m)
        EXPECT_EQ(from_reduced(ChebyshevPoly::basis(2 * m + 1), m), make(m, {{P(1, m), 1}, {X(2 * m, m), -1}}));
    EXPECT_EQ(from_reduced(ChebyshevPoly::basis(3) + ChebyshevPoly::basis(1), 1), FusionElement::of(P(1, 1)));
    EXPECT_THROW(from_reduced(ChebyshevPoly::basis(5), 1), std::invalid_argument);
}

TEST(Fuse, Examples)
{
    EXPECT_EQ(fuse(X(2, 1), X(2, 1)), make(1, {{X(1, 1), 1}, {X(3, 1), 1}}));
    EXPECT_EQ(fuse(X(2, 1), X(3, 1)), FusionElement::of(P(1, 1)));
    EXPECT_EQ(fuse(X(2, 1), P(1, 1)), make(1, {{X(3, 1), 2}, {P(2, 1), 1}}));
    EXPECT_EQ(fuse(X(3, 1), X(3, 1)), make(1, {{X(3, 1), 1}, {P(2, 1), 1}}));
    EXPECT_THROW(fuse(FusionElement(1), FusionElement(2)), std::invalid_argument);
}

TEST(Fuse, DirectTablesAgree)
{
    EXPECT_EQ(fuse_direct_x2(X(4, 2)), make(2, {{X(3, 2), 1}, {X(5, 2), 1}}));
    EXPECT_EQ(fuse_direct_x2(P(2, 2)), make(2, {{P(1, 2), 1}, {P(3, 2), 1}}));
    for (int m = 1; m <= 6; ++m)
    {
        EXPECT_EQ(fuse_direct_x2(P(2 * m, m)), make(m, {{X(2 * m + 1, m), 2}, {P(2 * m - 1, m), 1}}));
        for (const auto &L : basis_labels(m))
            EXPECT_EQ(fuse(X(2, m), L), fuse_direct_x2(L)) << "m=" << m << " " << L.name();
    }
}

TEST(Fuse, RingAxioms)
{
    for (int m = 1; m <= 3; ++m)
    {
        const auto B = basis_labels(m);
        for (const auto &A : B)
        {
            EXPECT_EQ(fuse(X(1, m), A), FusionElement::of(A));
            for (const auto &C : B)
            {
                const auto AC = fuse(A, C);
                EXPECT_EQ(AC, fuse(C, A));
                EXPECT_TRUE(AC.nonnegative());
                for (const auto &D : B)
                    EXPECT_EQ(fuse(AC, FusionElement::of(D)), fuse(FusionElement::of(A), fuse(C, D)));
            }
        }
    }
}

TEST(Fuse, SelfDualityThroughHomToUnit)
{
    for (int m = 1; m <= 4; ++m)
        for (int s = 1; s <= 2 * m + 1; ++s)
            EXPECT_EQ(hom_to_unit(fuse(X(s, m), X(s, m))), 1) << "m=" << m << " s=" << s;
    // X_1 itself need not occur: X_3 x X_3 = X_3 + P_2 at m = 1, where P_2 covers X_1
    const auto e = fuse(X(3, 1), X(3, 1));
    EXPECT_EQ(e[X(1, 1)], 0);
    EXPECT_EQ(socle_series(P(2, 1)).layers[0][0], X(1, 1));
}

TEST(Grothendieck, Examples)
{
    GrothendieckElement g(1);
    g.mult = {2, 2, 0};
    EXPECT_EQ(grothendieck(FusionElement::of(P(1, 1))), g);
    GrothendieckElement g5(2);
    g5.mult = {0, 0, 0, 0, 1};
    EXPECT_EQ(grothendieck(FusionElement::of(X(5, 2))), g5);
    GrothendieckElement g2(2);
    g2.mult = {0, 2, 2, 0, 0};
    EXPECT_EQ(grothendieck(FusionElement::of(P(2, 2))), g2);
}

TEST(Grothendieck, ReductionAndHomomorphism)
{
    for (int m = 1; m <= 4; ++m)
    {
        EXPECT_EQ(grothendieck_reduce(ChebyshevPoly::basis(2 * m + 1), m),
                  ChebyshevPoly::basis(2 * m - 1) + ChebyshevPoly::basis(0, 2));
        const ChebyshevPoly gen = ChebyshevPoly::basis(2 * m + 1) - ChebyshevPoly::basis(2 * m - 1) - ChebyshevPoly::basis(0, 2);
        for (int n = 0; n <= 6 * m; ++n)
            expect_same_class(ChebyshevPoly::basis(n), grothendieck_reduce(ChebyshevPoly::basis(n), m), gen);
        const auto B = basis_labels(m);
        for (const auto &A : B)
            for (const auto &C : B)
                EXPECT_EQ(grothendieck(fuse(A, C)),
                          k_product(grothendieck(FusionElement::of(A)), grothendieck(FusionElement::of(C))));
    }
    EXPECT_EQ(grothendieck_reduce(chebyshev_product(1, 2), 1), ChebyshevPoly::basis(1, 2) + ChebyshevPoly::basis(0, 2));
    EXPECT_EQ(grothendieck_reduce(ChebyshevPoly::basis(2), 1), ChebyshevPoly::basis(2));
}

TEST(Ranks, QuotientsAreFreeOfFullRank)
{
    for (int m = 1; m <= 5; ++m)
    {
        const auto r = ring_ranks(m);
        EXPECT_EQ(r.p_rank, 4 * m + 1);
        EXPECT_EQ(r.k_rank, 2 * m + 1);
        EXPECT_TRUE(r.p_ok);
        EXPECT_TRUE(r.k_ok);
    }
}

TEST(Socle, Examples)
{
    for (int m = 1; m <= 4; ++m)
    {
        const auto s = socle_series(P(1, m));
        EXPECT_EQ(s.layers[0], std::vector<ModuleLabel>{X(2 * m, m)});
        EXPECT_EQ(s.layers[1], (std::vector<ModuleLabel>{X(1, m), X(1, m)}));
        EXPECT_EQ(s.layers[2], std::vector<ModuleLabel>{X(2 * m, m)});
    }
    const auto s2 = socle_series(P(2, 1));
    EXPECT_EQ(s2.layers[0], std::vector<ModuleLabel>{X(1, 1)});
    EXPECT_EQ(s2.layers[1], (std::vector<ModuleLabel>{X(2, 1), X(2, 1)}));
    const auto s4 = socle_series(P(4, 2));
    EXPECT_EQ(s4.layers[0], std::vector<ModuleLabel>{X(1, 2)});
    EXPECT_EQ(s4.layers[1], (std::vector<ModuleLabel>{X(4, 2), X(4, 2)}));
    EXPECT_THROW(socle_series(X(1, 2)), UnsupportedLabel);
}

TEST(Serialization, BasisOrderAndText)
{
    EXPECT_EQ(make(2, {{X(3, 2), 2}, {P(1, 2), 1}, {X(1, 2), -1}}).to_string(), "-X_1 + 2X_3 + P_1");
    EXPECT_EQ(FusionElement(2).to_string(), "0");
}
