#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace swm
{

    using cplx = std::complex<double>;

    struct PoleError : std::domain_error
    {
        using std::domain_error::domain_error;
    };

    namespace detail
    {
        // Lanczos approximation, g = 7, n = 9.
        inline constexpr double lanczos_g = 7.0;
        inline constexpr std::array<double, 9> lanczos_coef = {
            0.99999999999980993,
            676.5203681218851,
            -1259.1392167224028,
            771.32342877765313,
            -176.61502916214059,
            12.507343278686905,
            -0.13857109526572012,
            9.9843695780195716e-6,
            1.5056327351493116e-7};

        inline bool is_nonpositive_integer(const cplx &z)
        {
            return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
        }

        // sin(pi z) with exact zeros at the integers.
        inline cplx sin_pi(const cplx &z)
        {
            const double x = z.real();
            const double n = std::round(x);
            const double r = x - n;
            const cplx s = std::sin(M_PI * cplx(r, z.imag()));
            return (static_cast<long long>(n) % 2 == 0) ? s : -s;
        }
    } // namespace detail

    // log Gamma(z). For Re z >= 1/2 this is the branch continuous from the
    // positive axis; for Re z < 1/2 it comes from reflection and may differ
    // from that branch by 2*pi*i*k. exp(log_gamma(z)) is always Gamma(z).
    inline cplx log_gamma(const cplx &z)
    {
        if (detail::is_nonpositive_integer(z))
            throw PoleError("log_gamma: pole at nonpositive integer");
        if (z.real() < 0.5)
        {
            const cplx s = detail::sin_pi(z);
            return std::log(M_PI) - std::log(s) - log_gamma(1.0 - z);
        }
        const cplx w = z - 1.0;
        cplx acc = detail::lanczos_coef[0];
        for (int i = 1; i < 9; ++i)
            acc += detail::lanczos_coef[i] / (w + static_cast<double>(i));
        const cplx t = w + detail::lanczos_g + 0.5;
        return 0.5 * std::log(2.0 * M_PI) + (w + 0.5) * std::log(t) - t + std::log(acc);
    }

    inline cplx gamma(const cplx &z)
    {
        if (detail::is_nonpositive_integer(z))
            throw PoleError("gamma: pole at nonpositive integer");
        if (z.real() < 0.5)
            return M_PI / (detail::sin_pi(z) * gamma(1.0 - z));
        return std::exp(log_gamma(z));
    }

    // 1/Gamma(z), entire.
    inline cplx rgamma(const cplx &z)
    {
        if (detail::is_nonpositive_integer(z))
            return 0.0;
        return 1.0 / gamma(z);
    }

    // s(x) = sin(pi x)
    inline cplx spi(const cplx &x) { return detail::sin_pi(x); }

    // e(x) = 1 - exp(2 pi i x)
    inline cplx frak_e(const cplx &x)
    {
        const double n = std::round(x.real());
        const cplx r(x.real() - n, x.imag());
        return 1.0 - std::exp(cplx(0.0, 2.0 * M_PI) * r);
    }

    enum class I0
    {
        Plus,
        Minus,
        None
    };

    // x^p for real x with the chosen side prescription for negative x.
    inline cplx phase_power(double x, const cplx &p, I0 side)
    {
        if (x == 0.0)
            throw std::domain_error("phase_power: singular point x = 0");
        const cplx mag = std::exp(p * std::log(std::abs(x)));
        if (x > 0.0 || side == I0::None)
            return mag;
        const double sgn = side == I0::Plus ? 1.0 : -1.0;
        return mag * std::exp(cplx(0.0, sgn * M_PI) * p);
    }

} // namespace swm
