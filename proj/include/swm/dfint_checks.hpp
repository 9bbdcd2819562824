#pragma once

#include "swm/dfint.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace swm
{

    // ---- transformation formulas between the seven J regions ----

    struct RegionRatio
    {
        std::string region;
        cplx value;
        cplx predicted_factor; // multiple of J^+_{00}
        double modulus_ratio;  // |value| / |factor * J00|
    };

    struct TransformationReport
    {
        cplx j00;
        std::vector<RegionRatio> ratios;
        double max_residual = 0.0;         // max | |ratio| - 1 |
        double consistency_residual = 0.0; // |J11/J00| vs |J10/J00| |J01/J00|
    };

    inline cplx transformation_factor(const RegionSpec &r, cplx a, cplx b, cplx rho)
    {
        const cplx ap = -a / rho, bp = -b / rho;
        const cplx sab = spi(a + b), sabp = spi(ap + bp);
        const bool plus = r.sign == Sign::Plus;
        if (r.i == 0 && r.j == 0)
            return 1.0;
        if (r.i == 1 && r.j == 0)
            return (plus ? spi(a) : spi(b)) / sab;
        if (r.i == 0 && r.j == 1)
            return (plus ? spi(ap) : spi(bp)) / sabp;
        return plus ? spi(a) * spi(ap) / (sab * sabp) : spi(b) * spi(bp) / (sab * sabp);
    }

    inline TransformationReport transformation_check(cplx a, cplx b, cplx rho, const LaurentPoly2<cplx> &F,
                                                     const DFConfig &cfg = {})
    {
        TransformationReport rep;
        const RegionSpec r00{Sign::Plus, 0, 0};
        rep.j00 = df_J_constrained(r00, F, a, b, rho, cfg);
        double m10 = 0, m01 = 0, m11 = 0;
        for (const auto &r : all_j_regions())
        {
            if (r.i == 0 && r.j == 0)
                continue;
            RegionRatio rr;
            rr.region = r.name();
            rr.value = df_J_constrained(r, F, a, b, rho, cfg);
            rr.predicted_factor = transformation_factor(r, a, b, rho);
            rr.modulus_ratio = std::abs(rr.value) / std::abs(rr.predicted_factor * rep.j00);
            rep.max_residual = std::max(rep.max_residual, std::abs(rr.modulus_ratio - 1.0));
            const double rel = std::abs(rr.value) / std::abs(rep.j00);
            if (r.sign == Sign::Plus)
            {
                if (r.i == 1 && r.j == 0)
                    m10 = rel;
                if (r.i == 0 && r.j == 1)
                    m01 = rel;
                if (r.i == 1 && r.j == 1)
                    m11 = rel;
            }
            rep.ratios.push_back(rr);
        }
        rep.consistency_residual = std::abs(m11 - m10 * m01) / std::max(m11, 1e-300);
        return rep;
    }

    // ---- expansion of I^+_{00} near z = 0 ----

    struct SeriesReport
    {
        double z;
        cplx lhs;                  // z^{-2(a+a')} I^+_{00}(z)
        std::vector<cplx> coeffs;  // J^+_{00}[F^+_{0;k}](a, a, rho)
        cplx rhs;                  // truncated sum
        double modulus_residual;   // | |lhs| - |rhs| | / |lhs|
        double complex_residual;   // |lhs - rhs| / |lhs|
    };

    inline SeriesReport series_check(cplx a, cplx rho, double z, int K, const DFConfig &cfg = {})
    {
        if (!(z > 0.0 && z < 1.0))
            throw std::invalid_argument("series_check: z in (0,1)");
        const cplx ap = -a / rho;
        SeriesReport rep;
        rep.z = z;
        const DFParams p = DFParams::constrained_full(a, rho, 1.0);
        const cplx I = df_I({Sign::Plus, 0, 0, RegionKind::I}, {}, p, 1.0, z, cfg, false);
        rep.lhs = std::exp(-2.0 * (a + ap) * std::log(z)) * I;
        rep.rhs = 0.0;
        for (int k = 0; k < K; ++k)
        {
            const auto F = taylor_factor(TaylorVariant::Plus0, k, a, ap);
            const cplx c = df_J_constrained({Sign::Plus, 0, 0}, F, a, a, rho, cfg);
            rep.coeffs.push_back(c);
            rep.rhs += c * std::pow(z, k);
        }
        rep.modulus_residual = std::abs(std::abs(rep.lhs) - std::abs(rep.rhs)) / std::abs(rep.lhs);
        rep.complex_residual = std::abs(rep.lhs - rep.rhs) / std::abs(rep.lhs);
        return rep;
    }

    // ---- contour identities behind the four-term connection relation ----

    // Pieces of the integral of |u|^a |u-z|^a |u-1|^a |v|^a' |v-z|^a' |v-1|^a' |u-v|^{-2 gamma}
    // (no phases) over the regions used by the contour arguments.
    struct ContourPieces
    {
        cplx P;   // 1 < v < u
        cplx Q;   // 1 < u < v
        cplx A1;  // z < u < 1, v > 1
        cplx A3;  // u < 0, v > 1
        cplx C1;  // z < u < v < 1
        cplx C2;  // z < v < u < 1
        cplx E;   // z < u < 1, v < 0
        cplx Cp;  // u < 0, z < v < 1
        cplx E1p; // u < v < 0
        cplx E2p; // v < u < 0
    };

    struct IdentityResidual
    {
        std::string name;
        cplx residual;
        double scale;
        double relative;
    };

    struct ContourReport
    {
        cplx a, ap, rho, gamma;
        double z;
        ContourPieces pieces;
        std::vector<IdentityResidual> literal;   // as displayed
        std::vector<IdentityResidual> corrected; // re-derived from the contour argument
        double max_literal = 0.0, max_corrected = 0.0;
    };

    inline ContourPieces contour_pieces(cplx a, cplx ap, cplx gamma, double z, const DFConfig &cfg = {})
    {
        auto piece = [&](Interval U, Interval V, DiagMode mode) {
            BoxIntegrand in;
            in.U = U;
            in.V = V;
            in.ufac = {{0.0, a}, {z, a}, {1.0, a}};
            in.vfac = {{0.0, ap}, {z, ap}, {1.0, ap}};
            in.gamma = gamma;
            in.mode = mode;
            in.apply_i0 = false;
            return df_box(in, cfg);
        };
        const Interval above{1.0, kInf}, mid{z, 1.0}, neg{-kInf, 0.0};
        ContourPieces p;
        p.P = piece(above, above, DiagMode::UpperOnly);
        p.Q = piece(above, above, DiagMode::LowerOnly);
        p.A1 = piece(mid, above, DiagMode::Both);
        p.A3 = piece(neg, above, DiagMode::Both);
        p.C1 = piece(mid, mid, DiagMode::LowerOnly);
        p.C2 = piece(mid, mid, DiagMode::UpperOnly);
        p.E = piece(mid, neg, DiagMode::Both);
        p.Cp = piece(neg, mid, DiagMode::Both);
        p.E1p = piece(neg, neg, DiagMode::LowerOnly);
        p.E2p = piece(neg, neg, DiagMode::UpperOnly);
        return p;
    }

    inline IdentityResidual make_residual(const std::string &name, std::initializer_list<cplx> terms)
    {
        cplx sum = 0.0;
        double scale = 0.0;
        for (const cplx &t : terms)
        {
            sum += t;
            scale = std::max(scale, std::abs(t));
        }
        return {name, sum, scale, std::abs(sum) / std::max(scale, 1e-300)};
    }

    inline ContourReport contour_identity_check(cplx a, cplx rho, cplx gamma, double z, const DFConfig &cfg = {})
    {
        if (!(z > 0.0 && z < 1.0))
            throw std::invalid_argument("contour_identity_check: z in (0,1)");
        ContourReport rep;
        rep.a = a;
        rep.rho = rho;
        rep.ap = -a / rho;
        rep.gamma = gamma;
        rep.z = z;
        const cplx ap = rep.ap, g = gamma;
        const ContourPieces &p = rep.pieces = contour_pieces(a, ap, g, z, cfg);
        const cplx ph = std::exp(cplx(0.0, -2.0 * M_PI) * g); // e^{-2 i pi gamma}
        auto s = [](cplx x) { return spi(x); };

        // i0-prescribed region integrals
        const cplx Ip11 = p.P + ph * p.Q;
        const cplx Im00 = p.C2 + ph * p.C1;
        const cplx Im11 = p.E2p + ph * p.E1p;
        // int_1^z int_1^inf = -A1, int_0^{-inf} int_1^inf = -A3
        rep.literal.push_back(make_residual(
            "main", {ph * s(2.0 * a - 4.0 * g) * Ip11, s(a) * p.A1, -s(a) * p.A3}));
        rep.literal.push_back(make_residual(
            "companion1", {-s(2.0 * (ap - g)) * p.A1, -ph * s(ap - 4.0 * g) * Im00, s(ap) * p.E}));
        rep.literal.push_back(make_residual(
            "companion2", {-s(2.0 * ap) * p.A3, -s(ap) * p.Cp, ph * s(ap - 2.0 * g) * Im11}));

        rep.corrected.push_back(make_residual(
            "main", {s(2.0 * a - 2.0 * g) * p.P, s(2.0 * a) * p.Q, s(a) * p.A1, -s(a) * p.A3}));
        rep.corrected.push_back(make_residual(
            "companion1", {s(2.0 * ap - 2.0 * g) * p.A1, s(ap - 2.0 * g) * p.C1, s(ap) * p.C2, -s(ap) * p.E}));
        rep.corrected.push_back(make_residual(
            "companion2", {s(2.0 * ap) * p.A3, s(ap) * p.Cp, -s(ap) * p.E1p, -s(ap - 2.0 * g) * p.E2p}));
        for (const auto &r : rep.literal)
            rep.max_literal = std::max(rep.max_literal, r.relative);
        for (const auto &r : rep.corrected)
            rep.max_corrected = std::max(rep.max_corrected, r.relative);
        return rep;
    }

    // ---- boundedness of the entire factor near a lattice hyperplane ----

    struct ProbePoint
    {
        cplx a, b;
        cplx J;
        cplx T;                     // J s(a)s(b)s(a')s(b') / (s(a+b)s(a'+b'))
        std::optional<cplx> T_closed; // from the closed form, F = 1 only
    };

    struct ProbeReport
    {
        std::vector<ProbePoint> points;
        double max_variation = 0.0;     // max |T_i - T_last| / |T_last|
        double closed_form_residual = 0.0; // max | |T| - |T_closed| | / |T_closed|
        bool bounded = false;
    };

    inline cplx entire_factor(cplx J, cplx a, cplx b, cplx rho)
    {
        const cplx ap = -a / rho, bp = -b / rho;
        return J * spi(a) * spi(b) * spi(ap) * spi(bp) / (spi(a + b) * spi(ap + bp));
    }

    inline ProbeReport entire_factor_probe(const LaurentPoly2<cplx> &F, const std::vector<std::pair<cplx, cplx>> &path,
                                           cplx rho, const DFConfig &cfg = {})
    {
        ProbeReport rep;
        const bool unit = F.terms().size() == 1 && F.terms().begin()->first == std::make_pair(0, 0) &&
                          F.terms().begin()->second == cplx(1.0);
        for (const auto &[a, b] : path)
        {
            ProbePoint pt;
            pt.a = a;
            pt.b = b;
            pt.J = df_J_constrained({Sign::Plus, 0, 0}, F, a, b, rho, cfg);
            pt.T = entire_factor(pt.J, a, b, rho);
            if (unit)
            {
                pt.T_closed = entire_factor(forrester_closed_form(a, b, rho), a, b, rho);
                rep.closed_form_residual = std::max(
                    rep.closed_form_residual, std::abs(std::abs(pt.T) - std::abs(*pt.T_closed)) / std::abs(*pt.T_closed));
            }
            rep.points.push_back(pt);
        }
        if (!rep.points.empty())
        {
            const cplx last = rep.points.back().T;
            bool finite = true;
            for (const auto &pt : rep.points)
            {
                finite = finite && std::isfinite(std::abs(pt.T));
                rep.max_variation = std::max(rep.max_variation, std::abs(std::abs(pt.T) - std::abs(last)) / std::abs(last));
            }
            rep.bounded = finite;
        }
        return rep;
    }

} // namespace swm
