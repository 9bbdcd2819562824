#pragma once

#include "swm/quadrature.hpp"
#include "swm/special.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swm
{

    struct ConvergenceError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct UnsupportedError : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    struct AccuracyError : std::runtime_error
    {
        double estimate;
        AccuracyError(const std::string &what, double est) : std::runtime_error(what), estimate(est) {}
    };

    struct DFConfig
    {
        int levels = 5;        // tanh-sinh step h = 2^-levels
        int mellin_terms = 64; // terms of the corner expansion
        int gl_nodes = 48;     // nodes in the finite-part window
        double fp_window = 0.5;
        double tail = 40.0;
        bool self_check = true;     // compare against one level coarser
        double max_rel_error = 1e-4; // accuracy error above this estimate
    };

    // Which half of a doubled-diagonal box to keep.
    enum class DiagMode
    {
        Both,
        UpperOnly, // u > v
        LowerOnly  // u < v
    };

    namespace engine
    {

        // |a0 + aT*T + aTp*T'|^p on the unit square.
        struct SqForm
        {
            double a0, aT, aTp;
            cplx p;
        };

        enum class Diag
        {
            None,
            Coincident // u and v range over the same interval: (T - T' + i0)^(-2 gamma)
        };

        struct SquareProblem
        {
            std::vector<SqForm> forms;
            cplx log_const{0.0, 0.0};
            Diag diag = Diag::None;
            cplx gamma{0.0, 0.0};
            cplx w_upper{1.0, 0.0}; // weight of T > T'
            cplx w_lower{1.0, 0.0}; // weight of T < T' (before the i0 phase)
        };

        struct Dual
        {
            cplx v{0.0, 0.0}, d{0.0, 0.0};
        };
        inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
        inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
        inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
        inline Dual operator*(cplx s, Dual a) { return {s * a.v, s * a.d}; }

        inline bool is_gamma_one(const cplx &g) { return std::abs(g - 1.0) < 1e-14; }
        inline bool is_gamma_zero(const cplx &g) { return std::abs(g) < 1e-14; }

        // Form expressed on a triangle: c0 + s*(c1 (1+y)/2 + c2 (1-y)/2).
        struct TriForm
        {
            double c0, c1, c2;
            cplx p;
            int kind; // 0 corner, 1 vanishes at (1,+1), 2 vanishes at (1,-1), 3 generic
        };

        struct TriangleSetup
        {
            std::vector<TriForm> corner, other;
            cplx P{0.0, 0.0}; // homogeneity exponent at the corner
            double e_yp = 0.0, e_ym = 0.0, e_s1 = 0.0;
            double e_yp_corner = 0.0, e_ym_corner = 0.0;
            double p_k1 = 0.0, p_k2 = 0.0;
            double kappa = 1.0; // sign of T - T' = kappa * s * y
        };

        inline double neg(double x) { return x < 0.0 ? x : 0.0; }

        inline TriangleSetup setup_triangle(const SquareProblem &pb, bool upper)
        {
            TriangleSetup ts;
            ts.kappa = upper ? -1.0 : 1.0;
            for (const auto &f : pb.forms)
            {
                TriForm t;
                if (!upper)
                {
                    t.c0 = f.a0;
                    t.c1 = f.aT;
                    t.c2 = f.aTp;
                }
                else
                {
                    t.c0 = f.a0 + f.aT + f.aTp;
                    t.c1 = -f.aT;
                    t.c2 = -f.aTp;
                }
                t.p = f.p;
                const double scale = std::abs(f.a0) + std::abs(f.aT) + std::abs(f.aTp);
                const double eps = 1e-13 * scale;
                if (std::abs(t.c0) <= eps)
                    t.c0 = 0.0;
                if (std::abs(t.c1) <= eps)
                    t.c1 = 0.0;
                if (std::abs(t.c2) <= eps)
                    t.c2 = 0.0;
                if (t.c0 == 0.0)
                {
                    if (t.c1 * t.c2 < 0.0)
                        throw UnsupportedError("dfint: form vanishes inside the integration square");
                    if (t.c1 == 0.0 && t.c2 == 0.0)
                        throw UnsupportedError("dfint: identically vanishing form");
                    t.kind = 0;
                    if ((t.c1 == 0.0 || t.c2 == 0.0) && f.p.real() <= -1.0)
                        throw ConvergenceError("dfint: edge exponent <= -1, integral diverges (p=" + std::to_string(f.p.real()) + ")");
                    ts.P += t.p;
                    if (t.c1 == 0.0)
                    {
                        ts.e_yp += neg(t.p.real());
                        ts.e_yp_corner += neg(t.p.real());
                    }
                    if (t.c2 == 0.0)
                    {
                        ts.e_ym += neg(t.p.real());
                        ts.e_ym_corner += neg(t.p.real());
                    }
                    ts.corner.push_back(t);
                }
                else
                {
                    // sign changes inside the triangle are not allowed
                    const double v1 = t.c0 + t.c1, v2 = t.c0 + t.c2;
                    if (t.c0 * v1 < 0.0 || t.c0 * v2 < 0.0)
                        throw UnsupportedError("dfint: form vanishes inside the integration square");
                    const bool z1 = std::abs(v1) <= 1e-13 * std::abs(t.c0);
                    const bool z2 = std::abs(v2) <= 1e-13 * std::abs(t.c0);
                    if (z1 && z2)
                        throw UnsupportedError("dfint: form vanishes along the far edge");
                    if (z1)
                    {
                        t.kind = 1;
                        ts.e_yp += neg(t.p.real());
                        ts.p_k1 += neg(t.p.real());
                    }
                    else if (z2)
                    {
                        t.kind = 2;
                        ts.e_ym += neg(t.p.real());
                        ts.p_k2 += neg(t.p.real());
                    }
                    else
                        t.kind = 3;
                    if (t.kind != 3 && f.p.real() <= -2.0)
                        throw ConvergenceError("dfint: point exponent <= -2, integral diverges");
                    ts.other.push_back(t);
                }
            }
            if (pb.diag == Diag::Coincident)
                ts.P -= 2.0 * pb.gamma;
            // near s = 1 the y-integral behaves like (1-s)^(1 + point exponent)
            if (ts.p_k1 < 0.0)
                ts.e_s1 = std::min(ts.e_s1, 1.0 + ts.p_k1 + ts.e_yp_corner);
            if (ts.p_k2 < 0.0)
                ts.e_s1 = std::min(ts.e_s1, 1.0 + ts.p_k2 + ts.e_ym_corner);
            return ts;
        }

        // log|c1 (1+y)/2 + c2 (1-y)/2| given log(1+y), log(1-y) when needed.
        inline double log_corner_m(const TriForm &f, const QNode *n, double y)
        {
            if (f.c2 == 0.0)
                return std::log(std::abs(f.c1)) + (n ? n->log_dl : std::log(1.0 + y)) - std::log(2.0);
            if (f.c1 == 0.0)
                return std::log(std::abs(f.c2)) + (n ? n->log_dr : std::log(1.0 - y)) - std::log(2.0);
            return std::log(std::abs(f.c1 * 0.5 * (1.0 + y) + f.c2 * 0.5 * (1.0 - y)));
        }

        // y-node data: y plus accurate 1+y, 1-y
        struct YPoint
        {
            double y;
            double opy, omy; // 1+y, 1-y
            double log_opy, log_omy;
        };

        inline YPoint ypoint_plain(double y)
        {
            return {y, 1.0 + y, 1.0 - y, std::log1p(y), std::log1p(-y)};
        }

        inline double log_m(const TriForm &f, const YPoint &yp)
        {
            if (f.c2 == 0.0)
                return std::log(std::abs(f.c1)) + yp.log_opy - std::log(2.0);
            if (f.c1 == 0.0)
                return std::log(std::abs(f.c2)) + yp.log_omy - std::log(2.0);
            return std::log(std::abs(f.c1 * 0.5 * yp.opy + f.c2 * 0.5 * yp.omy));
        }

        inline double logaddexp(double a, double b)
        {
            const double m = std::max(a, b);
            if (m == -INFINITY)
                return -INFINITY;
            return m + std::log1p(std::exp(std::min(a, b) - m));
        }

        // log|form| at (s, y) with log(1-s) known accurately.
        inline double log_form(const TriForm &f, double s, double log_oms, double log_s, const YPoint &yp)
        {
            switch (f.kind)
            {
            case 0:
                return log_s + log_m(f, yp);
            case 1: // c0 + c1 = 0: c0 (1-s) + s (c2 - c1)(1-y)/2, both terms of one sign
                return logaddexp(std::log(std::abs(f.c0)) + log_oms,
                                 log_s + std::log(0.5 * std::abs(f.c2 - f.c1)) + yp.log_omy);
            case 2:
                return logaddexp(std::log(std::abs(f.c0)) + log_oms,
                                 log_s + std::log(0.5 * std::abs(f.c1 - f.c2)) + yp.log_opy);
            default:
                return std::log(std::abs(f.c0 + s * (f.c1 * 0.5 * yp.opy + f.c2 * 0.5 * yp.omy)));
            }
        }

        // Coefficients pi_k of prod (1 + s mu_j(y))^p_j.
        template <class T>
        void expansion(const std::vector<T> &mu, const std::vector<cplx> &p, int K, std::vector<T> &pi,
                       std::vector<T> &q, std::vector<T> &powbuf)
        {
            q.assign(K, T{});
            powbuf.resize(mu.size());
            for (size_t j = 0; j < mu.size(); ++j)
                powbuf[j] = p[j] * mu[j];
            for (int i = 0; i < K; ++i)
            {
                T acc{};
                for (size_t j = 0; j < mu.size(); ++j)
                {
                    acc = acc + powbuf[j];
                    powbuf[j] = cplx(-1.0) * (powbuf[j] * mu[j]);
                }
                q[i] = acc;
            }
            pi.assign(K, T{});
            if constexpr (std::is_same_v<T, Dual>)
                pi[0] = Dual{1.0, 0.0};
            else
                pi[0] = 1.0;
            for (int n = 0; n + 1 < K; ++n)
            {
                T acc{};
                for (int i = 0; i <= n; ++i)
                    acc = acc + q[i] * pi[n - i];
                pi[n + 1] = cplx(1.0 / (n + 1)) * acc;
            }
        }

        class TriangleIntegrator
        {
        public:
            TriangleIntegrator(const SquareProblem &pb, bool upper, const DFConfig &cfg)
                : pb_(pb), upper_(upper), cfg_(cfg), ts_(setup_triangle(pb, upper))
            {
                h_ = std::ldexp(1.0, -cfg.levels);
                coincident_ = pb.diag == Diag::Coincident;
                if (coincident_)
                {
                    fp_ = is_gamma_one(pb.gamma);
                    if (!fp_ && !(2.0 * pb.gamma.real() < 1.0))
                        throw UnsupportedError("dfint: diagonal exponent supported only for gamma = 1 or Re gamma < 1/2");
                }
                // phases on the two sides of the diagonal (y > 0 / y < 0 in local coordinates)
                // T - T' = kappa s y; T > T' where kappa y > 0.
                const cplx lower_phase = coincident_ && !fp_ ? std::exp(cplx(0.0, -2.0 * M_PI) * pb.gamma) : cplx(1.0);
                cplx w_above = pb.w_upper, w_below = pb.w_lower * lower_phase;
                if (ts_.kappa > 0)
                {
                    wpos_ = w_above;
                    wneg_ = w_below;
                }
                else
                {
                    wpos_ = w_below;
                    wneg_ = w_above;
                }
                build_yrules();
            }

            cplx integrate()
            {
                cplx total = 0.0;
                double r0 = 0.0;
                if (!ts_.corner.empty() || coincident_)
                {
                    double R = std::numeric_limits<double>::infinity();
                    for (const auto &f : ts_.other)
                        R = std::min(R, std::abs(f.c0) / std::max(std::abs(f.c1), std::abs(f.c2)));
                    r0 = std::min(0.5, 0.5 * R);
                    total += mellin_part(r0);
                }
                total += outer_part(r0);
                return total;
            }

        private:
            const SquareProblem &pb_;
            bool upper_;
            DFConfig cfg_;
            TriangleSetup ts_;
            double h_;
            bool coincident_ = false, fp_ = false;
            cplx wpos_{1.0}, wneg_{1.0};

            struct YNode
            {
                YPoint yp;
                double w;
                double log_w;
                int side; // +1 / -1 / 0 (window)
            };
            std::vector<YNode> ynodes_corner_, ynodes_full_;
            std::vector<double> win_x_, win_w_;
            double delta_ = 0.0;

            static void add_ts(std::vector<YNode> &out, double a, double b, double el, double er, double h,
                               double tail, int side)
            {
                const QRule r = tanh_sinh(a, b, h, el, er, tail);
                for (const auto &n : r.nodes)
                {
                    YPoint yp;
                    yp.y = n.x;
                    // 1+y and 1-y: accurate when the node is near -1 / +1
                    if (a == -1.0)
                    {
                        yp.opy = n.dl;
                        yp.log_opy = n.log_dl;
                    }
                    else
                    {
                        yp.opy = 1.0 + n.x;
                        yp.log_opy = std::log1p(n.x);
                    }
                    if (b == 1.0)
                    {
                        yp.omy = n.dr;
                        yp.log_omy = n.log_dr;
                    }
                    else
                    {
                        yp.omy = 1.0 - n.x;
                        yp.log_omy = std::log1p(-n.x);
                    }
                    out.push_back({yp, std::exp(n.log_w), n.log_w, side});
                }
            }

            void build_yrules()
            {
                const double tail = cfg_.tail;
                auto build = [&](std::vector<YNode> &out, double eym, double eyp) {
                    if (!coincident_)
                        add_ts(out, -1.0, 1.0, eym, eyp, h_, tail, 0);
                    else if (fp_)
                    {
                        add_ts(out, -1.0, -delta_, eym, 0.0, h_, tail, -1);
                        add_ts(out, delta_, 1.0, 0.0, eyp, h_, tail, +1);
                    }
                    else
                    {
                        const double e0 = -2.0 * pb_.gamma.real();
                        add_ts(out, -1.0, 0.0, eym, e0, h_, tail, -1);
                        add_ts(out, 0.0, 1.0, e0, eyp, h_, tail, +1);
                    }
                };
                if (coincident_ && fp_)
                {
                    delta_ = cfg_.fp_window;
                    const GLRule gl = gauss_legendre(cfg_.gl_nodes);
                    for (size_t i = 0; i < gl.x.size(); ++i)
                    {
                        win_x_.push_back(delta_ * gl.x[i]);
                        win_w_.push_back(delta_ * gl.w[i]);
                    }
                }
                build(ynodes_corner_, ts_.e_ym_corner, ts_.e_yp_corner);
                build(ynodes_full_, ts_.e_ym, ts_.e_yp);
            }

            cplx side_weight(double y) const { return y > 0 ? wpos_ : wneg_; }

            // log of the corner factor prod m_j(y)^p_j (without |y|^-2gamma)
            cplx corner_log(const YPoint &yp) const
            {
                cplx acc = 0.0;
                for (const auto &f : ts_.corner)
                    acc += f.p * log_m(f, yp);
                return acc;
            }

            cplx mellin_part(double r0)
            {
                const int K = cfg_.mellin_terms;
                const size_t J = ts_.other.size();
                std::vector<cplx> p(J);
                std::vector<double> A(J), B(J);
                cplx log_c0 = 0.0;
                for (size_t j = 0; j < J; ++j)
                {
                    const auto &f = ts_.other[j];
                    p[j] = f.p;
                    A[j] = (f.c1 + f.c2) / (2.0 * f.c0);
                    B[j] = (f.c1 - f.c2) / (2.0 * f.c0);
                    log_c0 += f.p * std::log(std::abs(f.c0));
                }
                std::vector<cplx> Psi(K, 0.0);
                std::vector<cplx> mu(J), pi, q, buf;
                for (const auto &yn : ynodes_corner_)
                {
                    const double y = yn.yp.y;
                    for (size_t j = 0; j < J; ++j)
                        mu[j] = A[j] + B[j] * y;
                    expansion(mu, p, K, pi, q, buf);
                    cplx lw = corner_log(yn.yp) + yn.log_w;
                    if (coincident_ && !fp_)
                        lw += -2.0 * pb_.gamma * std::log(std::abs(y));
                    if (fp_)
                        lw -= 2.0 * std::log(std::abs(y));
                    if (lw.real() < -745.0)
                        continue;
                    const cplx W = std::exp(lw) * side_weight(y);
                    for (int k = 0; k < K; ++k)
                        Psi[k] += W * pi[k];
                }
                if (fp_)
                {
                    // window: sum w (f - f0)/y^2 - 2 f0/delta - i pi kappa f'(0)
                    std::vector<Dual> dmu(J), dpi, dq, dbuf;
                    for (size_t j = 0; j < J; ++j)
                        dmu[j] = Dual{A[j], B[j]};
                    expansion(dmu, p, K, dpi, dq, dbuf);
                    // corner factor and its log-derivative at y = 0
                    const YPoint y0 = ypoint_plain(0.0);
                    const cplx W0 = std::exp(corner_log(y0));
                    cplx dlog = 0.0;
                    for (const auto &f : ts_.corner)
                        dlog += f.p * (f.c1 - f.c2) / (f.c1 + f.c2);
                    const cplx W0d = W0 * dlog;
                    std::vector<cplx> pik;
                    for (size_t i = 0; i < win_x_.size(); ++i)
                    {
                        const double y = win_x_[i];
                        const YPoint yp = ypoint_plain(y);
                        for (size_t j = 0; j < J; ++j)
                            mu[j] = A[j] + B[j] * y;
                        expansion(mu, p, K, pi, q, buf);
                        const cplx W = std::exp(corner_log(yp));
                        const double wy = win_w_[i] / (y * y);
                        for (int k = 0; k < K; ++k)
                            Psi[k] += wy * (W * pi[k] - W0 * dpi[k].v);
                    }
                    for (int k = 0; k < K; ++k)
                    {
                        const cplx f0 = W0 * dpi[k].v;
                        const cplx f1 = W0d * dpi[k].v + W0 * dpi[k].d;
                        Psi[k] += -2.0 * f0 / delta_ - cplx(0.0, M_PI * ts_.kappa) * f1;
                    }
                }
                const double lr = std::log(r0);
                cplx sum = 0.0;
                for (int k = 0; k < K; ++k)
                {
                    const cplx e = ts_.P + 2.0 + static_cast<double>(k);
                    if (std::abs(e) < 1e-9)
                        throw PoleError("dfint: parameters on a pole of the continuation");
                    sum += Psi[k] * std::exp(e * lr) / e;
                }
                return 0.5 * sum * std::exp(pb_.log_const + log_c0);
            }

            cplx outer_part(double r0)
            {
                // s in (r0, 1): regular at r0 (if r0 > 0), singular at 1 per e_s1
                const double e_s0 = r0 > 0.0 ? 0.0 : std::max(ts_.P.real() + 1.0, -0.996);
                const QRule sr = tanh_sinh(r0, 1.0, h_, e_s0, ts_.e_s1, cfg_.tail);
                cplx total = 0.0;
                const size_t J = ts_.other.size();
                (void)J;
                for (const auto &sn : sr.nodes)
                {
                    const double s = sn.x;
                    const double log_oms = sn.log_dr;
                    const double log_s = r0 > 0.0 ? std::log(s) : sn.log_dl;
                    auto f_at = [&](const YPoint &yp) {
                        cplx acc = 0.0;
                        for (const auto &f : ts_.corner)
                            acc += f.p * (log_s + log_m(f, yp));
                        for (const auto &f : ts_.other)
                            acc += f.p * log_form(f, s, log_oms, log_s, yp);
                        return acc;
                    };
                    cplx inner = 0.0;
                    cplx diag_s = 1.0;
                    if (coincident_)
                        diag_s = std::exp(-2.0 * pb_.gamma * log_s);
                    for (const auto &yn : ynodes_full_)
                    {
                        cplx lv = f_at(yn.yp) + yn.log_w + sn.log_w;
                        if (coincident_ && !fp_)
                            lv += -2.0 * pb_.gamma * std::log(std::abs(yn.yp.y));
                        if (fp_)
                            lv -= 2.0 * std::log(std::abs(yn.yp.y));
                        if (lv.real() < -745.0)
                            continue;
                        inner += std::exp(lv) * side_weight(yn.yp.y);
                    }
                    cplx window = 0.0;
                    if (fp_)
                    {
                        const YPoint y0 = ypoint_plain(0.0);
                        const cplx f0 = std::exp(f_at(y0));
                        cplx dlog = 0.0;
                        for (const auto &f : ts_.corner)
                            dlog += f.p * (f.c1 - f.c2) / (f.c1 + f.c2);
                        for (const auto &f : ts_.other)
                        {
                            const double l0 = f.c0 + s * 0.5 * (f.c1 + f.c2);
                            dlog += f.p * s * 0.5 * (f.c1 - f.c2) / l0;
                        }
                        const cplx f1 = f0 * dlog;
                        for (size_t i = 0; i < win_x_.size(); ++i)
                        {
                            const double y = win_x_[i];
                            const cplx fy = std::exp(f_at(ypoint_plain(y)));
                            window += win_w_[i] * (fy - f0) / (y * y);
                        }
                        window += -2.0 * f0 / delta_ - cplx(0.0, M_PI * ts_.kappa) * f1;
                    }
                    total += 0.5 * s * diag_s * (inner + std::exp(sn.log_w) * window);
                }
                return total * std::exp(pb_.log_const);
            }
        };

        inline cplx integrate_square(const SquareProblem &pb, const DFConfig &cfg)
        {
            TriangleIntegrator L(pb, false, cfg);
            TriangleIntegrator U(pb, true, cfg);
            return L.integrate() + U.integrate();
        }

    } // namespace engine
} // namespace swm
