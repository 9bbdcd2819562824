#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace swm
{

    // One quadrature node with accurate distances to both endpoints, kept in
    // log form so endpoint singularities can be evaluated far below underflow.
    struct QNode
    {
        double x;     // abscissa
        double dl;    // x - a
        double dr;    // b - x
        double log_dl;
        double log_dr;
        double log_w; // log of the (positive) weight
    };

    struct QRule
    {
        std::vector<QNode> nodes;
    };

    namespace detail
    {
        inline double log1pexp(double x)
        {
            return x > 35.0 ? x : std::log1p(std::exp(x));
        }

        inline double logaddexp(double a, double b)
        {
            const double m = std::max(a, b);
            if (m == -INFINITY)
                return -INFINITY;
            return m + std::log1p(std::exp(std::min(a, b) - m));
        }
    } // namespace detail

    // Tanh-sinh rule on [a, b] with step h. Each side is truncated once the
    // endpoint distance is small enough that d^(1+e) < exp(-tail) for the
    // supplied endpoint exponent e (e = 0 for a regular end).
    inline QRule tanh_sinh(double a, double b, double h, double e_left = 0.0, double e_right = 0.0,
                           double tail = 40.0, double t_cap = 9.0)
    {
        if (!(b > a))
            throw std::invalid_argument("tanh_sinh: empty interval");
        const double len = b - a;
        const double log_len = std::log(len);
        auto need = [&](double e) {
            const double f = std::max(1.0 + std::min(e, 0.0), 0.004);
            return -tail / f;
        };
        const double need_l = need(e_left);
        const double need_r = need(e_right);
        QRule r;
        r.nodes.reserve(256);
        auto push = [&](double t) {
            const double w = 0.5 * M_PI * std::sinh(t);
            QNode q;
            // distance to a: len / (1 + e^{-2w}); to b: len / (1 + e^{2w})
            q.log_dl = log_len - detail::log1pexp(-2.0 * w);
            q.log_dr = log_len - detail::log1pexp(2.0 * w);
            q.dl = std::exp(q.log_dl);
            q.dr = std::exp(q.log_dr);
            q.x = (w <= 0.0) ? a + q.dl : b - q.dr;
            // weight: h * len/2 * (pi/2) cosh t * sech^2 w
            const double aw = std::abs(w);
            const double log_sech = std::log(2.0) - aw - detail::log1pexp(-2.0 * aw);
            q.log_w = std::log(h) + log_len - std::log(2.0) + std::log(0.5 * M_PI * std::cosh(t)) + 2.0 * log_sech;
            r.nodes.push_back(q);
            return q;
        };
        push(0.0);
        for (int k = 1;; ++k)
        {
            const double t = k * h;
            const QNode q = push(t);
            if (q.log_dr < need_r + log_len || t >= t_cap)
                break;
        }
        for (int k = 1;; ++k)
        {
            const double t = -k * h;
            const QNode q = push(t);
            if (q.log_dl < need_l + log_len || -t >= t_cap)
                break;
        }
        return r;
    }

    struct GLRule
    {
        std::vector<double> x, w;
    };

    // Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
    inline GLRule gauss_legendre(int n)
    {
        if (n < 1)
            throw std::invalid_argument("gauss_legendre: n >= 1");
        GLRule r;
        r.x.resize(n);
        r.w.resize(n);
        for (int i = 0; i < (n + 1) / 2; ++i)
        {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it)
            {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k)
                {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                if (n == 1)
                {
                    p1 = x;
                    p0 = 1.0;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16)
                    break;
            }
            r.x[i] = -x;
            r.x[n - 1 - i] = x;
            r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }

} // namespace swm
