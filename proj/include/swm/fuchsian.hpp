#pragma once

#include "swm/rational.hpp"
#include "swm/repdata.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace swm
{

    // Dense polynomial in one variable, coefficient k at index k.
    using RatPoly = std::vector<Rational>;

    namespace detail
    {
        inline RatPoly poly_mul(const RatPoly &a, const RatPoly &b)
        {
            if (a.empty() || b.empty())
                return {};
            RatPoly r(a.size() + b.size() - 1, Rational(0));
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j)
                    r[i + j] += a[i] * b[j];
            return r;
        }

        inline RatPoly poly_pow(const RatPoly &a, int n)
        {
            RatPoly r{Rational(1)};
            for (int i = 0; i < n; ++i)
                r = poly_mul(r, a);
            return r;
        }

        // p(x + 1)
        inline RatPoly poly_shift_one(const RatPoly &p)
        {
            RatPoly r;
            for (auto it = p.rbegin(); it != p.rend(); ++it)
            {
                r = poly_mul(r.empty() ? RatPoly{Rational(0)} : r, RatPoly{Rational(1), Rational(1)});
                r[0] += *it;
            }
            return r;
        }

        inline Rational poly_eval(const RatPoly &p, const Rational &x)
        {
            Rational r = 0;
            for (auto it = p.rbegin(); it != p.rend(); ++it)
                r = r * x + *it;
            return r;
        }

        inline void poly_trim(RatPoly &p)
        {
            while (!p.empty() && p.back() == 0)
                p.pop_back();
        }

        // s (s-1) ... (s-j+1)
        inline Rational falling(const Rational &s, int j)
        {
            Rational r = 1;
            for (int i = 0; i < j; ++i)
                r *= s - i;
            return r;
        }

        template <class T>
        T falling_t(const T &s, int j)
        {
            T r = 1;
            for (int i = 0; i < j; ++i)
                r *= s - i;
            return r;
        }
    } // namespace detail

    struct InternalInconsistency : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct LogarithmicSolution : std::runtime_error
    {
        Rational residual;
        LogarithmicSolution(const std::string &w, Rational r) : std::runtime_error(w), residual(std::move(r)) {}
    };

    // Phi'''' + p3/(z(z-1)) Phi''' + p2/(z(z-1))^2 Phi'' + p1/(z(z-1))^3 Phi' + p0/(z(z-1))^4 Phi = 0
    struct FuchsianOperator
    {
        int m = 1;
        std::array<RatPoly, 5> p; // p[4] = 1

        // Multiplied through by z^4 (z-1)^4 and written as sum_j Q_j(x) x^j d^j in the local
        // variable x = z (base 0) or x = z - 1 (base 1).
        std::array<RatPoly, 5> theta_form(int base) const
        {
            std::array<RatPoly, 5> q;
            for (int j = 0; j <= 4; ++j)
            {
                if (base == 0)
                    q[j] = detail::poly_mul(p[j], detail::poly_pow({Rational(-1), Rational(1)}, j));
                else
                    q[j] = detail::poly_mul(detail::poly_shift_one(p[j]), detail::poly_pow({Rational(1), Rational(1)}, j));
                q[j].resize(5, Rational(0));
            }
            return q;
        }
    };

    inline FuchsianOperator build_operator(int m)
    {
        require_m(m);
        const Rational M(m), d = 2 * M + 1;
        const Rational M2 = M * M, M3 = M2 * M, M4 = M3 * M, M5 = M4 * M, M6 = M5 * M;
        auto scale = [](RatPoly p, const Rational &s) {
            for (auto &c : p)
                c *= s;
            detail::poly_trim(p);
            return p;
        };
        FuchsianOperator op;
        op.m = m;
        op.p[0] = scale({3 * M4 + 12 * M3 + 2 * M2 - 4 * M - 1, -16 * M3 + 8 * M2 + 16 * M + 4, 16 * M3 - 8 * M2 - 16 * M - 4},
                        3 * M4 / (d * d * d * d));
        op.p[1] = scale({6 * M6 + 8 * M5 + 12 * M4 + 8 * M3 + 2 * M2, -12 * M6 - 8 * M5 + 12 * M3 + 13 * M2 + 6 * M + 1,
                         -24 * M5 - 72 * M4 - 84 * M3 - 51 * M2 - 18 * M - 3, 16 * M5 + 48 * M4 + 56 * M3 + 34 * M2 + 12 * M + 2},
                        2 / (d * d * d));
        op.p[2] = scale({-M4 + 2 * M3 + 5 * M2 + 4 * M + 1, -8 * M4 - 32 * M3 - 44 * M2 - 28 * M - 7, 8 * M4 + 32 * M3 + 44 * M2 + 28 * M + 7},
                        2 / (d * d));
        op.p[3] = scale({Rational(-1), Rational(2)}, 4 * (M + 1) * (M + 1) / d);
        op.p[4] = {Rational(1)};
        return op;
    }

    enum class SingularPoint
    {
        Zero,
        One,
        Infinity
    };

    // Indicial polynomial coefficients (ascending powers of s), solutions ~ x^s at 0/1 and z^{-s} at infinity.
    inline RatPoly indicial_polynomial(const FuchsianOperator &op, SingularPoint pt)
    {
        RatPoly out(5, Rational(0));
        for (int j = 0; j <= 4; ++j)
        {
            Rational lead;
            RatPoly fall{Rational(1)};
            if (pt == SingularPoint::Infinity)
            {
                // p_j / (z(z-1))^{4-j} ~ [z^{4-j}] p_j * z^{-(4-j)}; d^j z^{-s} = (-s)(-s-1)... z^{-s-j}
                const auto &pj = op.p[j];
                lead = (4 - j) < static_cast<int>(pj.size()) ? pj[4 - j] : Rational(0);
                for (int i = 0; i < j; ++i)
                    fall = detail::poly_mul(fall, {Rational(-i), Rational(-1)});
            }
            else
            {
                lead = op.theta_form(pt == SingularPoint::Zero ? 0 : 1)[j][0];
                for (int i = 0; i < j; ++i)
                    fall = detail::poly_mul(fall, {Rational(-i), Rational(1)});
            }
            for (size_t k = 0; k < fall.size(); ++k)
                out[k] += lead * fall[k];
        }
        detail::poly_trim(out);
        return out;
    }

    namespace detail
    {
        // Best rational approximation with bounded denominator (continued fractions).
        inline Rational rationalize(long double x, long max_den)
        {
            long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
            long double r = x;
            for (int it = 0; it < 64; ++it)
            {
                const long double a = std::floor(r);
                const long ai = static_cast<long>(a);
                const long q2 = ai * q1 + q0;
                if (q2 > max_den)
                    break;
                const long p2 = ai * p1 + p0;
                p0 = p1;
                q0 = q1;
                p1 = p2;
                q1 = q2;
                const long double frac = r - a;
                if (std::fabs(frac) < 1e-15L)
                    break;
                r = 1 / frac;
            }
            return make_rational(p1, q1);
        }

        // Exact division by (s - r).
        inline RatPoly deflate(const RatPoly &p, const Rational &r)
        {
            RatPoly q(p.size() - 1, Rational(0));
            Rational carry = 0;
            for (int k = static_cast<int>(p.size()) - 1; k >= 1; --k)
            {
                carry = p[k] + carry * r;
                q[k - 1] = carry;
            }
            return q;
        }
    } // namespace detail

    // Rational roots of the indicial polynomial, ascending. Non-rational roots signal a transcription error.
    inline std::vector<Rational> indicial_exponents(const FuchsianOperator &op, SingularPoint pt)
    {
        RatPoly poly = indicial_polynomial(op, pt);
        if (poly.size() != 5)
            throw InternalInconsistency("indicial polynomial is not of degree 4");
        std::vector<Rational> roots;
        while (poly.size() > 1)
        {
            const int n = static_cast<int>(poly.size()) - 1;
            Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> C =
                Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
            const long double lead = to_double(poly[n]);
            for (int i = 0; i < n; ++i)
                C(0, i) = -static_cast<long double>(to_double(poly[n - 1 - i])) / lead;
            for (int i = 1; i < n; ++i)
                C(i, i - 1) = 1;
            Eigen::EigenSolver<decltype(C)> es(C);
            bool found = false;
            for (int i = 0; i < n && !found; ++i)
            {
                const auto ev = es.eigenvalues()(i);
                if (std::fabs(ev.imag()) > 1e-6L * (1 + std::fabs(ev.real())))
                    continue;
                for (long den : {1000L, 100000L, 10000000L})
                {
                    const Rational r = detail::rationalize(ev.real(), den);
                    if (detail::poly_eval(poly, r) == 0)
                    {
                        roots.push_back(r);
                        poly = detail::deflate(poly, r);
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                throw InternalInconsistency("indicial polynomial has a non-rational root");
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    struct FrobeniusSolution
    {
        int base_point = 0;
        Rational exponent;
        std::vector<Rational> coefficients; // in x = z - base_point
        Rational log_residual;              // obstruction at a resonant order (0 if none)
        int resonant_order = -1;            // -1: no resonance met
    };

    // c_0 = 1, P_0(rho+k) c_k = -sum_{t=1..4} P_t(rho+k-t) c_{k-t}, P_t(s) = sum_j Q_j[t] s^{(j)}.
    inline FrobeniusSolution frobenius_series(const FuchsianOperator &op, int base_point, const Rational &exponent,
                                              int n_terms, bool throw_on_log = true)
    {
        if (base_point != 0 && base_point != 1)
            throw std::invalid_argument("base point must be 0 or 1");
        if (n_terms < 1)
            throw std::invalid_argument("n_terms >= 1");
        const auto q = op.theta_form(base_point);
        auto Pt = [&](int t, const Rational &s) {
            Rational r = 0;
            for (int j = 0; j <= 4; ++j)
                if (q[j][t] != 0)
                    r += q[j][t] * detail::falling(s, j);
            return r;
        };
        if (Pt(0, exponent) != 0)
            throw std::invalid_argument("exponent is not an indicial root");
        FrobeniusSolution sol;
        sol.base_point = base_point;
        sol.exponent = exponent;
        sol.log_residual = 0;
        sol.coefficients.reserve(n_terms);
        sol.coefficients.push_back(Rational(1));
        for (int k = 1; k < n_terms; ++k)
        {
            Rational rhs = 0;
            for (int t = 1; t <= 4 && t <= k; ++t)
                rhs -= Pt(t, exponent + k - t) * sol.coefficients[k - t];
            const Rational d = Pt(0, exponent + k);
            if (d == 0)
            {
                sol.resonant_order = k;
                sol.log_residual = rhs;
                if (rhs != 0 && throw_on_log)
                    throw LogarithmicSolution("nonzero logarithmic obstruction", rhs);
                sol.coefficients.push_back(Rational(0));
            }
            else
            {
                Rational ck = rhs / d;
                ck.canonicalize();
                sol.coefficients.push_back(std::move(ck));
            }
        }
        return sol;
    }

    // Coefficients of x^{rho+k} after applying the operator (theta form) to the truncated series;
    // returns the lowest k with a nonzero coefficient (or -1 if all vanish through n+3).
    inline int lowest_remainder_order(const FuchsianOperator &op, const FrobeniusSolution &sol)
    {
        const auto q = op.theta_form(sol.base_point);
        const int n = static_cast<int>(sol.coefficients.size());
        for (int k = 0; k < n + 4; ++k)
        {
            Rational r = 0;
            for (int t = 0; t <= 4 && t <= k; ++t)
            {
                if (k - t >= n)
                    continue;
                Rational pt = 0;
                const Rational s = sol.exponent + k - t;
                for (int j = 0; j <= 4; ++j)
                    pt += q[j][t] * detail::falling(s, j);
                r += pt * sol.coefficients[k - t];
            }
            if (r != 0)
                return k;
        }
        return -1;
    }

    struct EvaluationDomainError : std::domain_error
    {
        using std::domain_error::domain_error;
    };

    struct SolutionValues
    {
        std::array<std::complex<double>, 4> d; // value and z-derivatives 1..3
        double tail_bound = 0;                 // size of the last retained terms
    };

    // Base 0: z^rho sum c_k z^k. Base 1: (1-z)^rho sum c_k (z-1)^k. Principal branch, real-positive on (0,1).
    inline SolutionValues evaluate_solution(const FrobeniusSolution &sol, std::complex<double> z)
    {
        using C = std::complex<double>;
        const C x = sol.base_point == 0 ? z : C(1) - z;
        if (std::abs(x) >= 1 || std::abs(x) == 0)
            throw EvaluationDomainError("evaluation point outside the punctured convergence disk");
        const double rho = to_double(sol.exponent);
        const double sign_k = sol.base_point == 0 ? 1.0 : -1.0; // (z-1)^k = (-x)^k
        const double sign_d = sol.base_point == 0 ? 1.0 : -1.0; // d/dz = -d/dx
        SolutionValues out;
        out.d.fill(C(0));
        const C logx = std::log(x);
        const int n = static_cast<int>(sol.coefficients.size());
        double last = 0;
        for (int k = 0; k < n; ++k)
        {
            const double ck = to_double(sol.coefficients[k]) * std::pow(sign_k, k);
            if (ck == 0)
                continue;
            const double e = rho + k;
            for (int dv = 0; dv < 4; ++dv)
            {
                const double f = detail::falling_t<double>(e, dv) * std::pow(sign_d, dv);
                out.d[dv] += ck * f * std::exp((e - dv) * logx);
            }
            if (k >= n - 4)
                last = std::max(last, std::abs(ck * std::exp(e * logx)));
        }
        out.tail_bound = last * (1 + 1 / std::max(1e-300, 1 - std::abs(x)));
        return out;
    }

} // namespace swm
