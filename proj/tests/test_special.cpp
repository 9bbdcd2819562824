#include "swm/quadrature.hpp"
#include "swm/special.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace swm;

TEST(Gamma, RealValues)
{
    for (double x : {0.3, 0.5, 1.0, 2.5, 7.25, -0.5, -1.75})
        EXPECT_NEAR(swm::gamma(cplx(x)).real(), std::tgamma(x), 1e-12 * std::abs(std::tgamma(x)));
    EXPECT_NEAR(swm::gamma(cplx(0.5)).real(), std::sqrt(M_PI), 1e-14);
    EXPECT_NEAR(std::exp(log_gamma(cplx(10.0))).real(), 362880.0, 1e-7);
    EXPECT_THROW(swm::gamma(cplx(-2.0)), PoleError);
    EXPECT_THROW(log_gamma(cplx(0.0)), PoleError);
    EXPECT_EQ(rgamma(cplx(-3.0)), cplx(0.0));
}

TEST(Gamma, ReflectionAndRecurrence)
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(-3, 3);
    for (int t = 0; t < 20; ++t)
    {
        const cplx z(d(rng), d(rng));
        const cplx lhs = gamma(z) * gamma(1.0 - z);
        const cplx rhs = M_PI / std::sin(M_PI * z);
        EXPECT_LT(std::abs(lhs - rhs), 1e-11 * std::abs(rhs));
        const cplx g1 = gamma(z + 1.0), gz = gamma(z);
        EXPECT_LT(std::abs(g1 - z * gz), 1e-11 * std::abs(g1));
        EXPECT_LT(std::abs(std::exp(log_gamma(z)) - gz), 1e-11 * std::abs(gz));
    }
}

TEST(Elementary, PhasePowerAndFrakE)
{
    EXPECT_NEAR(std::abs(phase_power(4.0, 0.5, I0::Plus) - cplx(2.0)), 0.0, 1e-15);
    EXPECT_LT(std::abs(phase_power(-4.0, 0.5, I0::Plus) - cplx(0.0, 2.0)), 1e-15);
    EXPECT_LT(std::abs(phase_power(-4.0, 0.5, I0::Minus) - cplx(0.0, -2.0)), 1e-15);
    EXPECT_LT(std::abs(phase_power(-4.0, 0.5, I0::None) - cplx(2.0)), 1e-15);
    EXPECT_THROW(phase_power(0.0, 0.5, I0::Plus), std::domain_error);

    EXPECT_LT(std::abs(frak_e(0.5) - cplx(2.0)), 1e-15);
    EXPECT_LT(std::abs(frak_e(3.0)), 1e-15);
    EXPECT_LT(std::abs(frak_e(0.25) - cplx(1.0, -1.0)), 1e-15);
    EXPECT_LT(std::abs(spi(0.5) - cplx(1.0)), 1e-15);
    EXPECT_EQ(spi(4.0), cplx(0.0));
}

TEST(Quadrature, TanhSinhEndpointSingularities)
{
    // int_0^1 u^{-1/2} (1-u)^{-1/2} du = pi
    const auto rule = tanh_sinh(0.0, 1.0, 0.05, -0.5, -0.5);
    double s = 0;
    for (const auto &q : rule.nodes)
        s += std::exp(q.log_w - 0.5 * q.log_dl - 0.5 * q.log_dr);
    EXPECT_NEAR(s, M_PI, 1e-12);

    // Beta(a, b) with both exponents near -1
    const double a = 0.15, b = 0.3;
    const auto r2 = tanh_sinh(0.0, 1.0, 0.02, a - 1, b - 1);
    double t = 0;
    for (const auto &q : r2.nodes)
        t += std::exp(q.log_w + (a - 1) * q.log_dl + (b - 1) * q.log_dr);
    const double beta = std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
    EXPECT_NEAR(t, beta, 1e-9 * beta);
    EXPECT_THROW(tanh_sinh(1.0, 1.0, 0.1), std::invalid_argument);
}

TEST(Quadrature, GaussLegendrePolynomialExactness)
{
    const auto r = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k)
    {
        double s = 0;
        for (size_t i = 0; i < r.x.size(); ++i)
            s += r.w[i] * std::pow(r.x[i], k);
        EXPECT_NEAR(s, k % 2 ? 0.0 : 2.0 / (k + 1), 1e-14);
    }
    EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}
