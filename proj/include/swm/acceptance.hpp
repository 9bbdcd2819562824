#pragma once

#include "swm/connection.hpp"
#include "swm/dfint_checks.hpp"
#include "swm/fuchsian.hpp"
#include "swm/fusion.hpp"
#include "swm/repdata.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace swm::acceptance
{

    struct CriterionResult
    {
        int id = 0;
        std::string title;

        CriterionResult() = default;
        CriterionResult(int i, std::string t) : id(i), title(std::move(t)) {}

        bool applicable = true;
        bool pass = false;
        std::string detail;
        double seconds = 0;
    };

    // Restrict m-ranged criteria to one value of m (CLI verify); empty = full ranges.
    struct Scope
    {
        std::optional<int> m;
        unsigned seed = 2024;

        std::vector<int> range(int lo, int hi) const
        {
            std::vector<int> out;
            if (m)
            {
                if (*m >= lo && *m <= hi)
                    out.push_back(*m);
                return out;
            }
            for (int k = lo; k <= hi; ++k)
                out.push_back(k);
            return out;
        }
    };

    namespace detail
    {
        inline std::string sci(double x)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2e", x);
            return buf;
        }

        inline std::string join_ms(const std::vector<int> &ms)
        {
            if (ms.empty())
                return "none";
            std::ostringstream os;
            os << ms.front() << ".." << ms.back();
            return os.str();
        }

        inline LaurentPoly2<cplx> linear_df_poly(double rho)
        {
            LaurentPoly2<cplx> F(0);
            F.add(0, 0, 1.0);
            F.add(1, 0, 1.0);
            F.add(0, 1, -1.0 / rho);
            return F;
        }
    } // namespace detail

    inline CriterionResult fusion_oracle(const Scope &s)
    {
        CriterionResult r{1, "fusion oracle: fuse(X_2, L) equals the explicit X_2 tables"};
        const auto ms = s.range(1, 6);
        int checked = 0, bad = 0;
        for (int m : ms)
            for (const auto &L : basis_labels(m))
            {
                ++checked;
                if (!(fuse(ModuleLabel::X(2, m), L) == fuse_direct_x2(L)))
                    ++bad;
            }
        r.applicable = !ms.empty();
        r.pass = bad == 0;
        r.detail = "m=" + detail::join_ms(ms) + ", " + std::to_string(checked) + " labels, " + std::to_string(bad) + " mismatches";
        return r;
    }

    inline CriterionResult ring_axioms(const Scope &s)
    {
        CriterionResult r{2, "ring axioms: commutative, associative, unital, nonnegative; ranks 4m+1 and 2m+1"};
        const auto ms = s.range(1, 4);
        int bad = 0;
        std::string ranks;
        for (int m : ms)
        {
            const auto B = basis_labels(m);
            std::vector<std::vector<FusionElement>> prod(B.size(), std::vector<FusionElement>(B.size()));
            for (size_t i = 0; i < B.size(); ++i)
                for (size_t j = 0; j < B.size(); ++j)
                    prod[i][j] = fuse(B[i], B[j]);
            for (size_t i = 0; i < B.size(); ++i)
            {
                if (!(fuse(ModuleLabel::X(1, m), B[i]) == FusionElement::of(B[i])))
                    ++bad;
                for (size_t j = 0; j < B.size(); ++j)
                {
                    if (!(prod[i][j] == prod[j][i]) || !prod[i][j].nonnegative())
                        ++bad;
                    for (size_t k = 0; k < B.size(); ++k)
                        if (!(fuse(prod[i][j], FusionElement::of(B[k])) == fuse(FusionElement::of(B[i]), prod[j][k])))
                            ++bad;
                }
            }
            const RankReport rk = ring_ranks(m);
            if (!rk.p_ok || !rk.k_ok)
                ++bad;
            ranks += (ranks.empty() ? "" : " ") + std::to_string(rk.p_rank) + "/" + std::to_string(rk.k_rank);
        }
        r.applicable = !ms.empty();
        r.pass = bad == 0;
        r.detail = "m=" + detail::join_ms(ms) + ", violations " + std::to_string(bad) + ", ranks P/K " + ranks;
        return r;
    }

    inline CriterionResult grothendieck_homomorphism(const Scope &s)
    {
        CriterionResult r{3, "Grothendieck map is a ring homomorphism onto the K quotient"};
        const auto ms = s.range(1, 4);
        int pairs = 0, bad = 0;
        for (int m : ms)
        {
            const auto B = basis_labels(m);
            for (const auto &A : B)
                for (const auto &C : B)
                {
                    ++pairs;
                    const auto lhs = grothendieck(fuse(A, C));
                    const auto rhs = k_product(grothendieck(FusionElement::of(A)), grothendieck(FusionElement::of(C)));
                    if (!(lhs == rhs))
                        ++bad;
                }
        }
        r.applicable = !ms.empty();
        r.pass = bad == 0;
        r.detail = "m=" + detail::join_ms(ms) + ", " + std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
        return r;
    }

    inline CriterionResult riemann_scheme(const Scope &s)
    {
        CriterionResult r{4, "Riemann scheme: indicial exponents at 0, 1, inf; Fuchs sum 6; integer gaps"};
        const auto ms = s.range(1, 10);
        int bad = 0;
        for (int m : ms)
        {
            const auto op = build_operator(m);
            const auto rs = riemann_exponents(m);
            auto sorted = [](std::vector<Rational> v) {
                std::sort(v.begin(), v.end());
                return v;
            };
            const auto e0 = indicial_exponents(op, SingularPoint::Zero);
            const auto e1 = indicial_exponents(op, SingularPoint::One);
            const auto ei = indicial_exponents(op, SingularPoint::Infinity);
            if (e0 != sorted(rs.at0) || e1 != sorted(rs.at1) || ei != sorted(rs.atinf))
                ++bad;
            Rational sum = 0;
            for (const auto &x : e0)
                sum += x;
            for (const auto &x : e1)
                sum += x;
            for (const auto &x : ei)
                sum += x;
            if (sum != 6)
                ++bad;
            const auto ce = characteristic_exponents(m); // rho11, rho01, rho10, rho00
            if (ce[0] - ce[2] != 2 * m - 1 || ce[1] - ce[3] != 2 * m + 1)
                ++bad;
        }
        r.applicable = !ms.empty();
        r.pass = bad == 0;
        r.detail = "m=" + detail::join_ms(ms) + ", " + std::to_string(bad) + " mismatches";
        return r;
    }

    inline CriterionResult no_log(const Scope &s)
    {
        CriterionResult r{5, "no logarithms: every resonant Frobenius obstruction vanishes exactly"};
        const auto ms = s.range(1, 5);
        int resonant = 0, bad = 0;
        for (int m : ms)
        {
            const auto op = build_operator(m);
            for (int base : {0, 1})
                for (const auto &e : characteristic_exponents(m))
                {
                    const auto sol = frobenius_series(op, base, e, 4 * m + 8, false);
                    if (sol.resonant_order > 0)
                    {
                        ++resonant;
                        if (sol.log_residual != 0)
                            ++bad;
                    }
                }
        }
        // two resonant exponents per point and per m
        if (resonant != 4 * static_cast<int>(ms.size()))
            ++bad;
        r.applicable = !ms.empty();
        r.pass = bad == 0;
        r.detail = "m=" + detail::join_ms(ms) + ", " + std::to_string(resonant) + " resonant constructions, " +
                   std::to_string(bad) + " failures";
        return r;
    }

    inline CriterionResult connection(const Scope &s, int n_terms = 400, int precision = 128)
    {
        CriterionResult r{6, "connection matrix: M^2 = I exactly; numeric N matches M (zero pattern, cross-ratios)"};
        int sym_bad = 0;
        const auto sym_ms = s.range(1, 10);
        for (int m : sym_ms)
        {
            const auto M = paper_connection_matrix(m);
            if (!sym_is_identity(sym_mul(M, M)))
                ++sym_bad;
        }
        std::vector<int> num_ms = s.m ? std::vector<int>{*s.m} : std::vector<int>{1, 2, 3};
        bool num_ok = true;
        std::ostringstream os;
        os << "M^2=I failures " << sym_bad << " (m=" << detail::join_ms(sym_ms) << ")";
        ConnectionConfig cfg;
        cfg.n_terms = n_terms;
        cfg.precision_bits = precision;
        for (int m : num_ms)
        {
            const ConnectionResult c = connection_matrix(m, cfg);
            num_ok = num_ok && c.pass;
            os << "; m=" << m << ": " << (c.pass ? "match" : "MISMATCH") << " (resonance-basis cross-ratio "
               << detail::sci(c.cross_ratio_residual) << ", alternate basis "
               << (c.gauge.found ? detail::sci(c.alt_cross_ratio_residual) : std::string("not found"))
               << ", transposed M " << (c.transposed_gauge.found ? "fits" : "does not fit") << ")";
        }
        r.pass = sym_bad == 0 && num_ok;
        r.detail = os.str();
        return r;
    }

    inline CriterionResult forrester(const Scope &)
    {
        CriterionResult r{7, "Forrester closed form matches |J^+_{00}[1]| by quadrature"};
        const double pts[][3] = {{-0.3, -0.3, 2.0}, {-0.3, -0.45, 2.0}, {-0.25, -0.25, 4.0}, {-0.3, -0.35, 2.5}, {-0.2, -0.3, 3.0}};
        const auto one = LaurentPoly2<cplx>::constant(1.0, 0);
        double worst = 0;
        for (const auto &p : pts)
        {
            const cplx v = df_J_constrained({Sign::Plus, 0, 0}, one, p[0], p[1], p[2]);
            const cplx ex = forrester_closed_form(p[0], p[1], p[2]);
            worst = std::max(worst, std::abs(std::abs(v) - std::abs(ex)) / std::abs(ex));
        }
        r.pass = worst < 1e-6;
        r.detail = "5 points, max relative modulus error " + detail::sci(worst);
        return r;
    }

    inline CriterionResult transformations(const Scope &)
    {
        CriterionResult r{8, "transformation formulas: six region ratios match sine products"};
        const auto one = LaurentPoly2<cplx>::constant(1.0, 0);
        const double p1[][3] = {{-0.3, -0.35, 2.5}, {-0.3, -0.3, 2.0}, {-0.25, -0.25, 4.0}};
        const double p2[][3] = {{-0.6, -0.6, -0.8}, {-0.5, -0.55, -0.7}, {-0.65, -0.6, -0.9}};
        double w1 = 0, w2 = 0;
        bool sym = true;
        for (const auto &p : p1)
            w1 = std::max(w1, transformation_check(p[0], p[1], p[2], one).max_residual);
        for (const auto &p : p2)
        {
            const auto F = detail::linear_df_poly(p[2]);
            sym = sym && is_df_symmetric(F, cplx(p[2]));
            w2 = std::max(w2, transformation_check(p[0], p[1], p[2], F).max_residual);
        }
        r.pass = w1 < 1e-5 && w2 < 1e-5 && sym;
        r.detail = "F=1: max " + detail::sci(w1) + " (3 points); F=1+u-v/rho: max " + detail::sci(w2) + " (3 points)";
        return r;
    }

    inline CriterionResult beta_degenerations(const Scope &s)
    {
        CriterionResult r{9, "gamma=0 mixed regions match Gamma products"};
        std::mt19937 rng(s.seed);
        std::uniform_real_distribution<double> ua(-0.45, -0.3), ub(-0.9, -0.75);
        const auto one = LaurentPoly2<cplx>::constant(1.0, 0);
        double worst = 0;
        for (int t = 0; t < 10; ++t)
        {
            const double a1 = ua(rng), a2 = ua(rng), b1 = ub(rng), b2 = ub(rng);
            for (const auto &reg : all_j_regions())
            {
                if (reg.i == reg.j)
                    continue;
                const cplx v = df_J(reg, one, a1, a2, b1, b2, 0.0);
                const cplx ex = beta_degeneration(reg, a1, a2, b1, b2);
                worst = std::max(worst, std::abs(std::abs(v) - std::abs(ex)) / std::abs(ex));
            }
        }
        r.pass = worst < 1e-8;
        r.detail = "10 random points x 4 mixed regions, max relative error " + detail::sci(worst);
        return r;
    }

    inline CriterionResult series_expansion(const Scope &)
    {
        CriterionResult r{10, "series expansion of I^+_{00} (K=8) matches quadrature"};
        double worst = 0;
        for (double z : {0.05, 0.1})
            worst = std::max(worst, series_check(-0.1, 0.5, z, 8).complex_residual);
        r.pass = worst < 1e-6;
        r.detail = "z in {0.05, 0.1}, max relative residual " + detail::sci(worst);
        return r;
    }

    inline CriterionResult contour_identities(const Scope &s)
    {
        CriterionResult r{11, "contour identities (three displayed forms) and involutory C(c,c')"};
        // (a, a', gamma, z)
        const double pts[][4] = {{-0.4, -0.45, 0.06, 0.6}, {-0.35, -0.4, 0.05, 0.55}};
        double lit = 0, cor = 0;
        for (const auto &p : pts)
        {
            const auto rep = contour_identity_check(p[0], -p[0] / p[1], p[2], p[3]);
            lit = std::max(lit, rep.max_literal);
            cor = std::max(cor, rep.max_corrected);
        }
        const SymMatrix C = fourrel_matrix();
        bool inv = sym_is_identity(sym_mul(C, C));
        std::mt19937 rng(s.seed);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
        for (int t = 0; t < 20; ++t)
        {
            Rational c(num(rng), den(rng)), cp(num(rng), den(rng));
            c.canonicalize();
            cp.canonicalize();
            if (c == 0 || cp == 0)
                continue;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                {
                    Rational e = 0;
                    for (int k = 0; k < 4; ++k)
                        e += sym_evaluate_exact(C[i][k], c, cp) * sym_evaluate_exact(C[k][j], c, cp);
                    inv = inv && e == (i == j ? 1 : 0);
                }
        }
        r.pass = lit < 1e-4 && inv;
        r.detail = "displayed forms max relative residual " + detail::sci(lit) + " (2 points, gamma != 0); re-derived forms " +
                   detail::sci(cor) + "; C^2 = I " + (inv ? "exact" : "FAILS");
        return r;
    }

    inline CriterionResult structural(const Scope &s)
    {
        CriterionResult r{12, "structural data: Zhu dimension, blocks, socle series, decomposition multiplicities"};
        const auto ms = s.range(1, 6);
        int bad = 0;
        for (int m : ms)
        {
            if (zhu_dimension(m) != 6 * m + 1)
                ++bad;
            // block sizes: m blocks with two simples, one with a single simple
            std::vector<int> count(m + 2, 0);
            for (int t = 1; t <= 2 * m + 1; ++t)
                ++count[block_of(ModuleLabel::X(t, m))];
            for (int b = 1; b <= m; ++b)
                if (count[b] != 2)
                    ++bad;
            if (count[m + 1] != 1 || block_of(ModuleLabel::X(1, m)) != 1 || block_of(ModuleLabel::X(2 * m + 1, m)) != m + 1)
                ++bad;
            for (int t = 1; t <= 2 * m; ++t)
            {
                const auto P = ModuleLabel::P(t, m);
                const auto ss = socle_series(P);
                if (ss.layers.size() != 3 || !(ss.layers[0] == ss.layers[2]) || ss.layers[1].size() != 2 ||
                    !(ss.layers[1][0] == ss.layers[1][1]))
                    ++bad;
                GrothendieckElement g(m);
                for (const auto &layer : ss.layers)
                    for (const auto &L : layer)
                    {
                        ++g.mult[L.s - 1];
                        if (block_of(L) != block_of(P))
                            ++bad;
                    }
                if (!(g == grothendieck(FusionElement::of(P))))
                    ++bad;
            }
            for (int t = 1; t <= 2 * m + 1; ++t)
            {
                const auto dec = ns_decomposition(ModuleLabel::X(t, m), 4);
                for (size_t k = 0; k < dec.size(); ++k)
                {
                    const long expect = t % 2 ? 2 * static_cast<long>(k) + 1 : 2 * static_cast<long>(k) + 2;
                    if (dec[k].multiplicity != expect)
                        ++bad;
                }
            }
        }
        r.applicable = !ms.empty();
        r.pass = bad == 0;
        r.detail = "m=" + detail::join_ms(ms) + ", " + std::to_string(bad) + " violations";
        return r;
    }

    inline std::vector<CriterionResult> run_all(const Scope &s, const std::function<void(const CriterionResult &)> &on_done = {})
    {
        using Fn = std::function<CriterionResult(const Scope &)>;
        const std::vector<Fn> fns = {fusion_oracle, ring_axioms, grothendieck_homomorphism, riemann_scheme, no_log,
                                     [](const Scope &sc) { return connection(sc); }, forrester, transformations,
                                     beta_degenerations, series_expansion, contour_identities, structural};
        std::vector<CriterionResult> out;
        for (const auto &f : fns)
        {
            const auto t0 = std::chrono::steady_clock::now();
            CriterionResult r;
            try
            {
                r = f(s);
            }
            catch (const std::exception &e)
            {
                r.id = static_cast<int>(out.size()) + 1;
                r.pass = false;
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (on_done)
                on_done(r);
            out.push_back(std::move(r));
        }
        return out;
    }

} // namespace swm::acceptance
