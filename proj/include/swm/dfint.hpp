#pragma once

#include "swm/dfint_engine.hpp"
#include "swm/laurent.hpp"
#include "swm/special.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace swm
{

    enum class Sign
    {
        Plus,
        Minus
    };

    enum class RegionKind
    {
        J, // unit-interval geometry
        I  // points 0 < z2 < z1
    };

    struct RegionSpec
    {
        Sign sign = Sign::Plus;
        int i = 0, j = 0;
        RegionKind kind = RegionKind::J;

        std::string name() const
        {
            return std::string(sign == Sign::Plus ? "+" : "-") + std::to_string(i) + std::to_string(j);
        }
    };

    // Parses "+00", "-10", ...
    inline RegionSpec parse_region(const std::string &s, RegionKind kind = RegionKind::J)
    {
        if (s.size() != 3 || (s[0] != '+' && s[0] != '-') || (s[1] != '0' && s[1] != '1') ||
            (s[2] != '0' && s[2] != '1'))
            throw std::invalid_argument("region must look like +00, -10, ...");
        return {s[0] == '+' ? Sign::Plus : Sign::Minus, s[1] - '0', s[2] - '0', kind};
    }

    inline std::vector<RegionSpec> all_j_regions()
    {
        return {{Sign::Plus, 0, 0}, {Sign::Plus, 1, 0}, {Sign::Minus, 1, 0}, {Sign::Plus, 0, 1},
                {Sign::Minus, 0, 1}, {Sign::Plus, 1, 1}, {Sign::Minus, 1, 1}};
    }

    struct Interval
    {
        double lo, hi;
        bool operator==(const Interval &o) const { return lo == o.lo && hi == o.hi; }
    };

    inline constexpr double kInf = std::numeric_limits<double>::infinity();

    inline std::pair<Interval, Interval> j_box(const RegionSpec &r)
    {
        const Interval unit{0.0, 1.0}, above{1.0, kInf}, below{-kInf, 0.0};
        if (r.sign == Sign::Plus || (r.i == 0 && r.j == 0))
        {
            const Interval u = r.i ? above : unit, v = r.j ? above : unit;
            return {u, v};
        }
        if (r.i == 1 && r.j == 1)
            return {below, below};
        if (r.i == 0)
            return {unit, below};
        return {below, unit};
    }

    inline std::pair<Interval, Interval> i_box(const RegionSpec &r, double z1, double z2)
    {
        if (!(z1 > z2 && z2 > 0.0))
            throw std::invalid_argument("I-region requires z1 > z2 > 0");
        if (r.sign == Sign::Plus)
        {
            const Interval lo{0.0, z2}, hi{z1, kInf};
            return {r.i ? hi : lo, r.j ? hi : lo};
        }
        const Interval mid{z2, z1}, neg{-kInf, 0.0};
        return {r.i ? neg : mid, r.j ? neg : mid};
    }

    // |w - x|^p
    struct PowerFactor
    {
        double x;
        cplx p;
    };

    // (w - x)^n, signed
    struct MonoFactor
    {
        double x;
        int n;
    };

    struct BoxTerm
    {
        cplx coeff{1.0, 0.0};
        std::vector<MonoFactor> u, v;
    };

    struct BoxIntegrand
    {
        Interval U{0.0, 1.0}, V{0.0, 1.0};
        std::vector<PowerFactor> ufac, vfac;
        std::vector<BoxTerm> terms{BoxTerm{}};
        cplx gamma{0.0, 0.0};
        DiagMode mode = DiagMode::Both;
        bool apply_i0 = true; // false: |u - v|^{-2 gamma} on both sides
    };

    namespace detail
    {
        struct Mobius
        {
            double A = 1, B = 0, C = 0, D = 1;
            double det() const { return A * D - B * C; }
            // t for a point x (infinite x maps to the pole)
            double inv(double x) const
            {
                if (std::isinf(x))
                    return -D / C;
                return (D * x - B) / (A - C * x);
            }
        };

        inline Mobius choose_mobius(const Interval &U, const Interval &V)
        {
            const bool pinf = std::isinf(U.hi) || std::isinf(V.hi);
            const bool minf = std::isinf(U.lo) || std::isinf(V.lo);
            std::vector<double> fin;
            for (double e : {U.lo, U.hi, V.lo, V.hi})
                if (std::isfinite(e))
                    fin.push_back(e);
            Mobius m;
            if (!pinf && !minf)
                return m;
            const double lo = *std::min_element(fin.begin(), fin.end());
            const double hi = *std::max_element(fin.begin(), fin.end());
            const double S = hi > lo ? hi - lo : 1.0;
            if (pinf && !minf)
            {
                m.A = S - lo;
                m.B = lo;
                m.C = -1;
                m.D = 1;
                return m;
            }
            if (minf && !pinf)
            {
                m.A = hi + S;
                m.B = hi;
                m.C = 1;
                m.D = 1;
                return m;
            }
            // one interval (-inf, h1), the other (l2, inf)
            const Interval &left = std::isinf(U.lo) ? U : V;
            const Interval &right = std::isinf(U.lo) ? V : U;
            if (!(std::isinf(right.hi) && left.hi <= right.lo))
                throw UnsupportedError("dfint: unsupported doubly infinite box");
            m.A = left.hi + right.lo;
            m.B = -right.lo;
            m.C = 2;
            m.D = -1;
            return m;
        }

        struct SideMap
        {
            double base, step; // t = base + step * T
        };

        class ProblemBuilder
        {
        public:
            ProblemBuilder(const Mobius &mob, SideMap su, SideMap sv) : mob_(mob), su_(su), sv_(sv) {}

            // |(A - C x) t + (B - D x)|^p on the given side (x finite)
            void point_factor(bool is_u, double x, cplx p, std::optional<int> n)
            {
                const double k = mob_.A - mob_.C * x, l = mob_.B - mob_.D * x;
                affine(is_u, k, l, p, n);
                // |Ct + D|^{-p}
                affine(is_u, mob_.C, mob_.D, -p, n ? std::optional<int>(-*n) : std::nullopt);
            }

            void jacobian(bool is_u)
            {
                const SideMap &s = is_u ? su_ : sv_;
                log_const_ += std::log(std::abs(mob_.det())) + std::log(std::abs(s.step));
                affine(is_u, mob_.C, mob_.D, -2.0, std::nullopt);
            }

            // |Ct + D|^q
            void denom_power(bool is_u, cplx q) { affine(is_u, mob_.C, mob_.D, q, std::nullopt); }

            void add_const(cplx c) { log_const_ += c; }

            void add_form(const engine::SqForm &f) { extra_.push_back(f); }

            engine::SquareProblem finish() const
            {
                engine::SquareProblem pb;
                pb.log_const = log_const_;
                for (const auto &[r, p] : troots_)
                    if (p != cplx(0.0))
                        pb.forms.push_back({-r, 1.0, 0.0, p});
                for (const auto &[r, p] : vroots_)
                    if (p != cplx(0.0))
                        pb.forms.push_back({-r, 0.0, 1.0, p});
                for (const auto &f : extra_)
                    pb.forms.push_back(f);
                return pb;
            }

        private:
            Mobius mob_;
            SideMap su_, sv_;
            cplx log_const_{0.0, 0.0};
            std::vector<std::pair<double, cplx>> troots_, vroots_;
            std::vector<engine::SqForm> extra_;

            static void merge(std::vector<std::pair<double, cplx>> &roots, double r, cplx p)
            {
                for (auto &e : roots)
                    if (std::abs(e.first - r) <= 1e-13 * std::max(1.0, std::abs(r)))
                    {
                        e.second += p;
                        return;
                    }
                roots.emplace_back(r, p);
            }

            // |k t + l|^p with t = base + step T
            void affine(bool is_u, double k, double l, cplx p, std::optional<int> n)
            {
                const SideMap &s = is_u ? su_ : sv_;
                const double alpha = k * s.base + l, beta = k * s.step;
                const double scale = std::abs(k * s.base) + std::abs(l) + std::abs(beta);
                if (std::abs(beta) <= 1e-15 * scale || beta == 0.0)
                {
                    if (alpha == 0.0)
                        throw std::domain_error("dfint: factor vanishes identically");
                    log_const_ += p * std::log(std::abs(alpha));
                    if (n && alpha < 0.0 && (*n % 2 != 0))
                        log_const_ += cplx(0.0, M_PI);
                    return;
                }
                double r = -alpha / beta;
                if (std::abs(r) < 1e-13)
                    r = 0.0;
                if (std::abs(r - 1.0) < 1e-13)
                    r = 1.0;
                if (r > 0.0 && r < 1.0)
                    throw UnsupportedError("dfint: factor vanishes inside the region");
                log_const_ += p * std::log(std::abs(beta));
                if (n && (*n % 2 != 0) && alpha + 0.5 * beta < 0.0)
                    log_const_ += cplx(0.0, M_PI);
                merge(is_u ? troots_ : vroots_, r, p);
            }
        };
    } // namespace detail

    namespace detail
    {
        inline cplx df_box_raw(const BoxIntegrand &in, const DFConfig &cfg);
    }

    struct DFValue
    {
        cplx value;
        double error_estimate; // |value - value at one level coarser|
    };

    inline DFValue df_box_estimate(const BoxIntegrand &in, const DFConfig &cfg = {})
    {
        const cplx fine = detail::df_box_raw(in, cfg);
        DFConfig coarse = cfg;
        coarse.levels = std::max(1, cfg.levels - 1);
        const cplx c = detail::df_box_raw(in, coarse);
        return {fine, std::abs(fine - c)};
    }

    // Integral over a box of
    //   prod |u - x|^p prod |v - y|^q (u - v + i0)^{-2 gamma} * sum_terms coeff * monomials.
    inline cplx df_box(const BoxIntegrand &in, const DFConfig &cfg = {})
    {
        if (!cfg.self_check)
            return detail::df_box_raw(in, cfg);
        const DFValue r = df_box_estimate(in, cfg);
        const double scale = std::max(std::abs(r.value), 1e-300);
        if (!(r.error_estimate <= cfg.max_rel_error * scale))
            throw AccuracyError("dfint: quadrature not converged across levels (estimate " +
                                    std::to_string(r.error_estimate / scale) + ")",
                                r.error_estimate);
        return r.value;
    }

    inline cplx detail::df_box_raw(const BoxIntegrand &in, const DFConfig &cfg)
    {
        using namespace detail;
        const Interval &U = in.U, &V = in.V;
        if (!(U.hi > U.lo) || !(V.hi > V.lo))
            throw std::invalid_argument("df_box: empty interval");
        const bool coincident = U == V;
        if (!coincident && !(U.hi <= V.lo || V.hi <= U.lo))
            throw UnsupportedError("df_box: partially overlapping intervals");
        const Mobius mob = choose_mobius(U, V);
        if (!(mob.det() > 0))
            throw std::logic_error("df_box: orientation");
        auto tint = [&](const Interval &I) {
            double a = mob.inv(I.lo), b = mob.inv(I.hi);
            if (a > b)
                std::swap(a, b);
            return std::pair<double, double>(a, b);
        };
        const auto [tu0, tu1] = tint(U);
        const auto [tv0, tv1] = tint(V);
        SideMap su{tu0, tu1 - tu0}, sv{tv0, tv1 - tv0};
        if (!coincident)
        {
            if (std::abs(tu1 - tv0) < 1e-14)
                su = {tu1, -(tu1 - tu0)};
            else if (std::abs(tv1 - tu0) < 1e-14)
                sv = {tv1, -(tv1 - tv0)};
        }
        const bool has_diag = !engine::is_gamma_zero(in.gamma);
        const bool fp = coincident && engine::is_gamma_one(in.gamma);
        if (fp && in.mode != DiagMode::Both)
            throw UnsupportedError("df_box: half-box modes are not available at gamma = 1");
        if (fp && !in.apply_i0)
            throw UnsupportedError("df_box: gamma = 1 requires the i0 prescription");

        // sign of u - v for disjoint boxes
        double uv_sign = 0.0;
        if (!coincident)
            uv_sign = U.lo >= V.hi ? 1.0 : -1.0;

        cplx total = 0.0;
        for (const auto &term : in.terms)
        {
            if (term.coeff == cplx(0.0))
                continue;
            ProblemBuilder b(mob, su, sv);
            b.jacobian(true);
            b.jacobian(false);
            for (const auto &f : in.ufac)
                b.point_factor(true, f.x, f.p, std::nullopt);
            for (const auto &f : in.vfac)
                b.point_factor(false, f.x, f.p, std::nullopt);
            for (const auto &f : term.u)
                b.point_factor(true, f.x, cplx(f.n), f.n);
            for (const auto &f : term.v)
                b.point_factor(false, f.x, cplx(f.n), f.n);
            engine::SquareProblem pb;
            if (has_diag)
            {
                const cplx g = in.gamma;
                b.add_const(-2.0 * g * std::log(mob.det()));
                b.denom_power(true, 2.0 * g);
                b.denom_power(false, 2.0 * g);
                if (coincident)
                {
                    b.add_const(-2.0 * g * std::log(su.step));
                    pb = b.finish();
                    pb.diag = engine::Diag::Coincident;
                    pb.gamma = g;
                    if (!in.apply_i0)
                        pb.w_lower = std::exp(cplx(0.0, 2.0 * M_PI) * g);
                }
                else
                {
                    b.add_form({su.base - sv.base, su.step, -sv.step, -2.0 * g});
                    pb = b.finish();
                    if (uv_sign < 0 && in.apply_i0)
                        pb.log_const += cplx(0.0, -2.0 * M_PI) * g;
                }
            }
            else
            {
                pb = b.finish();
                if (coincident && in.mode != DiagMode::Both)
                    pb.diag = engine::Diag::Coincident; // split along u = v only
            }
            if (in.mode != DiagMode::Both)
            {
                if (coincident)
                {
                    if (in.mode == DiagMode::UpperOnly)
                        pb.w_lower = 0.0;
                    else
                        pb.w_upper = 0.0;
                }
                else if ((in.mode == DiagMode::UpperOnly) != (uv_sign > 0))
                    continue;
            }
            total += term.coeff * engine::integrate_square(pb, cfg);
        }
        return total;
    }

    // Monomials of a Laurent polynomial as box terms.
    inline std::vector<BoxTerm> box_terms(const LaurentPoly2<cplx> &F)
    {
        std::vector<BoxTerm> out;
        const double x = F.center();
        for (const auto &[e, c] : F.terms())
        {
            BoxTerm t;
            t.coeff = c;
            if (e.first != 0)
                t.u.push_back({x, e.first});
            if (e.second != 0)
                t.v.push_back({x, e.second});
            out.push_back(t);
        }
        return out;
    }

    struct DFParams
    {
        cplx a1{0}, a2{0}, b1{0}, b2{0}, c1{0}, c2{0}, gamma{1.0};
        bool has_c = false;

        // a2 = a' = -a/rho, b2 = b' = -b/rho, gamma = 1
        static DFParams constrained(cplx a, cplx b, cplx rho)
        {
            if (rho == cplx(0.0) || rho == cplx(1.0))
                throw std::invalid_argument("rho must avoid 0 and 1");
            DFParams p;
            p.a1 = a;
            p.a2 = -a / rho;
            p.b1 = b;
            p.b2 = -b / rho;
            p.gamma = 1.0;
            return p;
        }

        // all of a, b, c built from (a, a')
        static DFParams constrained_full(cplx a, cplx rho, cplx gamma = 1.0)
        {
            DFParams p = constrained(a, a, rho);
            p.c1 = p.a1;
            p.c2 = p.a2;
            p.gamma = gamma;
            p.has_c = true;
            return p;
        }
    };

    inline cplx df_J(const RegionSpec &region, const LaurentPoly2<cplx> &F, cplx a1, cplx a2, cplx b1, cplx b2,
                     cplx gamma, const DFConfig &cfg = {})
    {
        if (F.center() != 0.0 && F.center() != 1.0)
            throw std::invalid_argument("df_J: F must be centred at 0 or 1");
        BoxIntegrand in;
        std::tie(in.U, in.V) = j_box(region);
        in.ufac = {{0.0, a1}, {1.0, b1}};
        in.vfac = {{0.0, a2}, {1.0, b2}};
        in.terms = box_terms(F);
        in.gamma = gamma;
        return df_box(in, cfg);
    }

    inline cplx df_J(const RegionSpec &region, const LaurentPoly2<cplx> &F, const DFParams &p,
                     const DFConfig &cfg = {})
    {
        return df_J(region, F, p.a1, p.a2, p.b1, p.b2, p.gamma, cfg);
    }

    // J(a, b, rho) with a' = -a/rho, b' = -b/rho and gamma = 1.
    inline cplx df_J_constrained(const RegionSpec &region, const LaurentPoly2<cplx> &F, cplx a, cplx b, cplx rho,
                                 const DFConfig &cfg = {})
    {
        return df_J(region, F, DFParams::constrained(a, b, rho), cfg);
    }

    // A Laurent polynomial with poles at 0, z2, z1: each term is a product of (w - x)^n.
    using PolePoly = std::vector<BoxTerm>;

    // strict: also enforce the standing assumption z2 > z1 - z2.
    inline cplx df_I(const RegionSpec &region, const PolePoly &E, const DFParams &p, double z1, double z2,
                     const DFConfig &cfg = {}, bool strict = true)
    {
        if (!(z1 > z2 && z2 > 0.0))
            throw std::invalid_argument("df_I: requires z1 > z2 > 0");
        if (strict && !(z2 > z1 - z2))
            throw std::invalid_argument("df_I: requires z2 > z1 - z2");
        BoxIntegrand in;
        std::tie(in.U, in.V) = i_box(region, z1, z2);
        in.ufac = {{0.0, p.a1}, {z2, p.b1}, {z1, p.c1}};
        in.vfac = {{0.0, p.a2}, {z2, p.b2}, {z1, p.c2}};
        in.terms = E.empty() ? PolePoly{BoxTerm{}} : E;
        in.gamma = p.gamma;
        return df_box(in, cfg);
    }

    // ---- closed forms ----

    inline cplx forrester_closed_form(cplx a, cplx b, cplx rho)
    {
        if (rho == cplx(0.0))
            throw PoleError("forrester: rho = 0");
        const cplx rp = 1.0 / rho;
        const cplx ap = -a * rp, bp = -b * rp;
        const cplx sa = spi(a);
        if (std::abs(sa) < 1e-300)
            throw PoleError("forrester: sin(pi a) = 0");
        const cplx lg = log_gamma(rp - 1.0) - log_gamma(rp) + log_gamma(1.0 + b) + log_gamma(1.0 - a - b) -
                        log_gamma(-a) + log_gamma(ap) + log_gamma(bp) - log_gamma(1.0 + ap + bp);
        return rp * rp * spi(a + b) / sa * std::exp(lg);
    }

    // Gamma-product value of the gamma = 0, F = 1 integral over a mixed region.
    inline cplx beta_degeneration(const RegionSpec &r, cplx a1, cplx a2, cplx b1, cplx b2)
    {
        if (r.i == r.j)
            throw std::invalid_argument("beta_degeneration: mixed regions only");
        const bool plus = r.sign == Sign::Plus;
        // (0,1): u in (0,1); (1,0): roles of the variables swapped
        const cplx A1 = r.i == 0 ? a1 : a2, B1 = r.i == 0 ? b1 : b2;
        const cplx A2 = r.i == 0 ? a2 : a1, B2 = r.i == 0 ? b2 : b1;
        cplx lg = log_gamma(A1 + 1.0) + log_gamma(B1 + 1.0) + log_gamma(-A2 - B2 - 1.0) - log_gamma(A1 + B1 + 2.0);
        if (plus)
            lg += log_gamma(B2 + 1.0) - log_gamma(-A2);
        else
            lg += log_gamma(A2 + 1.0) - log_gamma(-B2);
        return std::exp(lg);
    }

    // ---- trigonometric prefactors ----

    struct Pair
    {
        cplx x1, x2;
    };

    inline cplx trig_c(Sign sign, int i, int j, Pair a, Pair b, cplx g)
    {
        auto e = frak_e;
        if (i == 0 && j == 0)
            return e(a.x1) * e(a.x2) * e(b.x1) * e(b.x2) * e(a.x1 + a.x2 - 2.0 * g) * e(b.x1 + b.x2 - 2.0 * g);
        if (sign == Sign::Minus)
            return trig_c(Sign::Plus, i, j, b, a, g);
        if (i == 1 && j == 1)
            return e(b.x1) * e(b.x2) * e(b.x1 + b.x2 - 2.0 * g) * e(a.x1 + b.x1 - 2.0 * g) *
                   e(a.x2 + b.x2 - 2.0 * g) * e(a.x1 + a.x2 + b.x1 + b.x2 - 2.0 * g);
        if (i == 0 && j == 1)
            return e(a.x1) * e(b.x1) * e(b.x2) * e(b.x1 + b.x2 - 2.0 * g) * e(a.x2 + b.x2 - 2.0 * g);
        return e(a.x2) * e(b.x1) * e(b.x2) * e(b.x1 + b.x2 - 2.0 * g) * e(a.x1 + b.x1 - 2.0 * g);
    }

    inline cplx trig_d(Sign sign, int i, int j, Pair a, Pair b, Pair c, cplx g)
    {
        auto e = frak_e;
        if (i == j)
            throw std::invalid_argument("trig_d: mixed regions only");
        if (sign == Sign::Plus)
        {
            if (i == 0)
                return e(a.x1) * e(b.x1) * e(c.x2) * e(a.x2 + b.x2 + c.x2 - 2.0 * g);
            return e(a.x2) * e(b.x2) * e(c.x1) * e(a.x1 + b.x1 + c.x1 - 2.0 * g);
        }
        if (i == 0)
            return e(b.x1) * e(c.x1) * e(a.x2) * e(a.x2 + b.x2 + c.x2 - 2.0 * g);
        return e(b.x2) * e(c.x2) * e(a.x1) * e(a.x1 + b.x1 + c.x1 - 2.0 * g);
    }

    // ---- singular locus ----

    struct LocusReport
    {
        bool on_locus = false;
        std::vector<std::string> violated;
    };

    namespace detail
    {
        inline double dist_to_integer(cplx x)
        {
            return std::hypot(x.real() - std::round(x.real()), x.imag());
        }

        inline void check_family(const std::string &tag, Pair a, Pair b, cplx g, double tol, LocusReport &rep)
        {
            const std::pair<const char *, cplx> items[] = {
                {"a1", a.x1},
                {"a2", a.x2},
                {"a1+a2-2g", a.x1 + a.x2 - 2.0 * g},
                {"b1", b.x1},
                {"b2", b.x2},
                {"b1+b2-2g", b.x1 + b.x2 - 2.0 * g},
                {"a1+b1", a.x1 + b.x1},
                {"a2+b2", a.x2 + b.x2},
                {"a1+a2+b1+b2-2g", a.x1 + a.x2 + b.x1 + b.x2 - 2.0 * g}};
            for (const auto &[name, v] : items)
                if (dist_to_integer(v) < tol)
                {
                    rep.on_locus = true;
                    rep.violated.push_back(tag + ":" + name);
                }
        }
    } // namespace detail

    inline LocusReport on_singular_locus(const DFParams &p, double tol = 1e-12)
    {
        LocusReport rep;
        const Pair a{p.a1, p.a2}, b{p.b1, p.b2};
        if (!p.has_c)
        {
            detail::check_family("H(a,b)", a, b, p.gamma, tol, rep);
            return rep;
        }
        const Pair c{p.c1, p.c2};
        auto sum = [](Pair x, Pair y) { return Pair{x.x1 + y.x1, x.x2 + y.x2}; };
        detail::check_family("H(a,b)", a, b, p.gamma, tol, rep);
        detail::check_family("H(b,c)", b, c, p.gamma, tol, rep);
        detail::check_family("H(a,c)", a, c, p.gamma, tol, rep);
        detail::check_family("H(a+b,c)", sum(a, b), c, p.gamma, tol, rep);
        detail::check_family("H(b+c,a)", sum(b, c), a, p.gamma, tol, rep);
        detail::check_family("H(a+c,b)", sum(a, c), b, p.gamma, tol, rep);
        return rep;
    }

    // ---- Taylor coefficient polynomials of the expansion generating functions ----

    enum class TaylorVariant
    {
        Plus1,
        Plus0,
        Minus1,
        Minus0,
        MixedPlus01,
        MixedPlus10,
        MixedMinus01,
        MixedMinus10
    };

    // generalized binomial coefficient binom(a, k)
    inline cplx gbinom(cplx a, int k)
    {
        cplx r = 1.0;
        for (int i = 0; i < k; ++i)
            r *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
        return r;
    }

    inline LaurentPoly2<cplx> taylor_factor(TaylorVariant v, int k, cplx a, cplx ap)
    {
        if (k < 0)
            throw std::invalid_argument("taylor_factor: k >= 0");
        using V = TaylorVariant;
        const bool mixed = v == V::MixedPlus01 || v == V::MixedPlus10 || v == V::MixedMinus01 || v == V::MixedMinus10;
        const int center = (v == V::Minus1 || v == V::Minus0 || v == V::MixedMinus01 || v == V::MixedMinus10) ? 1 : 0;
        LaurentPoly2<cplx> F(center);
        if (!mixed)
        {
            // [z^k] (1 - z x)^a (1 - z y)^a' with x, y the substituted variables
            int su = 1; // exponent sign of (w - center) per power of x
            double sgn = -1.0;
            switch (v)
            {
            case V::Plus1: // x = u^-1
                su = -1;
                break;
            case V::Plus0: // x = u
                su = 1;
                break;
            case V::Minus1: // x = (u-1)^-1
                su = -1;
                break;
            case V::Minus0: // x = -(u-1)
                su = 1;
                sgn = 1.0;
                break;
            default:
                break;
            }
            for (int i = 0; i <= k; ++i)
            {
                const int j = k - i;
                const cplx c = gbinom(a, i) * std::pow(sgn, i) * gbinom(ap, j) * std::pow(sgn, j);
                F.add(su * i, su * j, c);
            }
            return F;
        }
        // G_k(x1, x2) = [z^k] (1 - z x1)^a (1 - z x2)^a' (1 - z x1 x2)^-2
        // x1 = s1 * (u - c)^e1, x2 = s2 * (v - c)^e2
        int e1 = 1, e2 = 1;
        double s1 = 1.0, s2 = 1.0;
        switch (v)
        {
        case V::MixedPlus01: // (u, v^-1)
            e2 = -1;
            break;
        case V::MixedPlus10: // (u^-1, v)
            e1 = -1;
            break;
        case V::MixedMinus01: // (1-u, (1-v)^-1)
            s1 = -1.0;
            s2 = -1.0;
            e2 = -1;
            break;
        case V::MixedMinus10: // ((1-u)^-1, 1-v)
            s1 = -1.0;
            s2 = -1.0;
            e1 = -1;
            break;
        default:
            break;
        }
        for (int i1 = 0; i1 <= k; ++i1)
            for (int i2 = 0; i1 + i2 <= k; ++i2)
            {
                const int l = k - i1 - i2;
                const int n1 = i1 + l, n2 = i2 + l;
                const cplx c = gbinom(a, i1) * std::pow(-1.0, i1) * gbinom(ap, i2) * std::pow(-1.0, i2) *
                               static_cast<double>(l + 1) * std::pow(s1, n1) * std::pow(s2, n2);
                F.add(e1 * n1, e2 * n2, c);
            }
        return F;
    }

} // namespace swm
