#pragma once

#include "swm/chebyshev.hpp"
#include "swm/repdata.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swm
{

    // Multiplicities over X_1..X_{2m+1}, P_1..P_{2m}.
    struct FusionElement
    {
        int m = 1;
        std::vector<std::int64_t> mult;

        FusionElement() = default;
        explicit FusionElement(int m_) : m(m_), mult(4 * m_ + 1, 0) { require_m(m_); }

        static FusionElement of(const ModuleLabel &L)
        {
            FusionElement e(L.m);
            e.mult[L.index()] = 1;
            return e;
        }

        std::int64_t operator[](const ModuleLabel &L) const { return mult.at(L.index()); }
        std::int64_t &operator[](const ModuleLabel &L) { return mult.at(L.index()); }

        bool operator==(const FusionElement &o) const { return m == o.m && mult == o.mult; }

        friend FusionElement operator+(FusionElement a, const FusionElement &b)
        {
            if (a.m != b.m)
                throw std::invalid_argument("fusion: mismatched m");
            for (size_t i = 0; i < a.mult.size(); ++i)
                a.mult[i] = detail::checked_add(a.mult[i], b.mult[i]);
            return a;
        }

        bool nonnegative() const
        {
            return std::all_of(mult.begin(), mult.end(), [](std::int64_t v) { return v >= 0; });
        }

        // e.g. "2X_3 + P_2"
        std::string to_string() const
        {
            std::string s;
            for (int i = 0; i <= 4 * m; ++i)
            {
                const std::int64_t v = mult[i];
                if (v == 0)
                    continue;
                const std::int64_t av = v < 0 ? -v : v;
                if (s.empty())
                    s += v < 0 ? "-" : "";
                else
                    s += v < 0 ? " - " : " + ";
                if (av != 1)
                    s += std::to_string(av);
                s += label_at(i, m).name();
            }
            return s.empty() ? "0" : s;
        }
    };

    // Multiplicities over X_1..X_{2m+1}.
    struct GrothendieckElement
    {
        int m = 1;
        std::vector<std::int64_t> mult;

        GrothendieckElement() = default;
        explicit GrothendieckElement(int m_) : m(m_), mult(2 * m_ + 1, 0) { require_m(m_); }

        bool operator==(const GrothendieckElement &o) const { return m == o.m && mult == o.mult; }

        std::string to_string() const
        {
            FusionElement f(m);
            std::copy(mult.begin(), mult.end(), f.mult.begin());
            return f.to_string();
        }
    };

    inline ChebyshevPoly class_polynomial(const ModuleLabel &L)
    {
        if (L.is_simple())
            return ChebyshevPoly::basis(L.s - 1);
        return ChebyshevPoly::basis(2 * L.m + L.s) + ChebyshevPoly::basis(2 * L.m - L.s);
    }

    namespace detail
    {
        // Reduce modulo U_N - tail (deg tail < N) by rewriting the top term:
        // U_d = U_k U_N - sum_{i=1}^{min(k,N)} U_{d-2i}, k = d - N, and U_k U_N == U_k tail.
        inline ChebyshevPoly reduce_mod(const ChebyshevPoly &poly, int N, const ChebyshevPoly &tail)
        {
            std::vector<std::int64_t> c = poly.coeffs();
            for (int d = static_cast<int>(c.size()) - 1; d >= N; --d)
            {
                const std::int64_t a = c[d];
                if (a == 0)
                    continue;
                c[d] = 0;
                const int k = d - N;
                for (int i = 1; i <= std::min(k, N); ++i)
                    c[d - 2 * i] = checked_add(c[d - 2 * i], -a);
                const ChebyshevPoly add = (ChebyshevPoly::basis(k) * tail).scaled(a);
                for (int j = 0; j <= add.degree(); ++j)
                    c[j] = checked_add(c[j], add[j]);
            }
            return ChebyshevPoly(std::move(c));
        }
    } // namespace detail

    // Unique representative of degree <= 4m modulo U_{4m+1} - 2 U_{2m}.
    inline ChebyshevPoly reduce_P(const ChebyshevPoly &poly, int m)
    {
        require_m(m);
        return detail::reduce_mod(poly, 4 * m + 1, ChebyshevPoly::basis(2 * m, 2));
    }

    // Unique representative of degree <= 2m modulo U_{2m+1} - U_{2m-1} - 2.
    inline ChebyshevPoly grothendieck_reduce(const ChebyshevPoly &poly, int m)
    {
        require_m(m);
        return detail::reduce_mod(poly, 2 * m + 1, ChebyshevPoly::basis(2 * m - 1) + ChebyshevPoly::basis(0, 2));
    }

    // U_k -> X_{k+1} (k <= 2m); U_{2m+s} -> P_s - X_{2m+1-s}.
    inline FusionElement from_reduced(const ChebyshevPoly &poly, int m)
    {
        require_m(m);
        if (poly.degree() > 4 * m)
            throw std::invalid_argument("from_reduced: degree exceeds 4m");
        FusionElement e(m);
        for (int k = 0; k <= poly.degree(); ++k)
        {
            const std::int64_t a = poly[k];
            if (a == 0)
                continue;
            if (k <= 2 * m)
                e.mult[k] = detail::checked_add(e.mult[k], a);
            else
            {
                const int s = k - 2 * m;
                e[ModuleLabel::P(s, m)] = detail::checked_add(e[ModuleLabel::P(s, m)], a);
                e[ModuleLabel::X(2 * m + 1 - s, m)] = detail::checked_add(e[ModuleLabel::X(2 * m + 1 - s, m)], -a);
            }
        }
        return e;
    }

    inline ChebyshevPoly to_polynomial(const FusionElement &e)
    {
        ChebyshevPoly p;
        for (int i = 0; i <= 4 * e.m; ++i)
            if (e.mult[i] != 0)
                p = p + class_polynomial(label_at(i, e.m)).scaled(e.mult[i]);
        return p;
    }

    inline FusionElement fuse(const FusionElement &a, const FusionElement &b)
    {
        if (a.m != b.m)
            throw std::invalid_argument("fuse: mismatched m");
        return from_reduced(reduce_P(to_polynomial(a) * to_polynomial(b), a.m), a.m);
    }

    inline FusionElement fuse(const ModuleLabel &a, const ModuleLabel &b)
    {
        return fuse(FusionElement::of(a), FusionElement::of(b));
    }

    // X_2 times a basis label, from the explicit tables.
    inline FusionElement fuse_direct_x2(const ModuleLabel &L)
    {
        const int m = L.m;
        FusionElement e(m);
        auto X = [&](int s) -> std::int64_t & { return e[ModuleLabel::X(s, m)]; };
        auto P = [&](int s) -> std::int64_t & { return e[ModuleLabel::P(s, m)]; };
        if (L.is_simple())
        {
            if (L.s == 1)
                X(2) += 1;
            else if (L.s <= 2 * m)
            {
                X(L.s - 1) += 1;
                X(L.s + 1) += 1;
            }
            else
                P(1) += 1;
            return e;
        }
        if (L.s == 1)
        {
            X(2 * m + 1) += 2;
            P(2) += 1;
        }
        else if (L.s == 2 * m)
        {
            X(2 * m + 1) += 2;
            P(2 * m - 1) += 1;
        }
        else
        {
            P(L.s - 1) += 1;
            P(L.s + 1) += 1;
        }
        return e;
    }

    inline GrothendieckElement grothendieck(const FusionElement &e)
    {
        const int m = e.m;
        GrothendieckElement g(m);
        for (int s = 1; s <= 2 * m + 1; ++s)
            g.mult[s - 1] = detail::checked_add(g.mult[s - 1], e.mult[s - 1]);
        for (int s = 1; s <= 2 * m; ++s)
        {
            const std::int64_t a = e[ModuleLabel::P(s, m)];
            if (a == 0)
                continue;
            int outer, inner;
            if (s % 2 == 0)
            {
                const int i = s / 2;
                outer = 2 * (m - i) + 1;
                inner = 2 * i;
            }
            else
            {
                const int i = (s - 1) / 2;
                outer = 2 * (m - i);
                inner = 2 * i + 1;
            }
            g.mult[outer - 1] = detail::checked_add(g.mult[outer - 1], detail::checked_mul(2, a));
            g.mult[inner - 1] = detail::checked_add(g.mult[inner - 1], detail::checked_mul(2, a));
        }
        return g;
    }

    inline ChebyshevPoly to_polynomial(const GrothendieckElement &g)
    {
        ChebyshevPoly p;
        for (int s = 1; s <= 2 * g.m + 1; ++s)
            if (g.mult[s - 1] != 0)
                p = p + ChebyshevPoly::basis(s - 1, g.mult[s - 1]);
        return p;
    }

    // Product in K: multiply class polynomials and reduce; U_k -> X_{k+1}.
    inline GrothendieckElement k_product(const GrothendieckElement &a, const GrothendieckElement &b)
    {
        if (a.m != b.m)
            throw std::invalid_argument("k_product: mismatched m");
        const ChebyshevPoly r = grothendieck_reduce(to_polynomial(a) * to_polynomial(b), a.m);
        GrothendieckElement g(a.m);
        for (int k = 0; k <= r.degree(); ++k)
            g.mult[k] = r[k];
        return g;
    }

    struct SocleSeries
    {
        std::vector<std::vector<ModuleLabel>> layers;
    };

    inline SocleSeries socle_series(const ModuleLabel &L)
    {
        if (L.is_simple())
            throw UnsupportedLabel("socle_series: projective labels only");
        const int m = L.m;
        int outer, inner;
        if (L.s % 2 == 0)
        {
            const int i = L.s / 2;
            outer = 2 * (m - i) + 1;
            inner = 2 * i;
        }
        else
        {
            const int i = (L.s - 1) / 2;
            outer = 2 * (m - i);
            inner = 2 * i + 1;
        }
        const auto O = ModuleLabel::X(outer, m), I = ModuleLabel::X(inner, m);
        return {{{O}, {I, I}, {O}}};
    }

    // dim Hom(e, X_1): X_1 itself and its projective cover P_{2m} (top X_1).
    inline std::int64_t hom_to_unit(const FusionElement &e)
    {
        return e[ModuleLabel::X(1, e.m)] + e[ModuleLabel::P(2 * e.m, e.m)];
    }

    // Rank data of the two quotient rings.
    struct RankReport
    {
        int p_rank = 0;
        int k_rank = 0;
        bool p_ok = false, k_ok = false;
    };

    namespace detail
    {
        // determinant of an integer matrix (Bareiss)
        inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a)
        {
            const size_t n = a.size();
            mpz_class prev = 1;
            int sign = 1;
            for (size_t k = 0; k < n; ++k)
            {
                if (a[k][k] == 0)
                {
                    size_t r = k + 1;
                    while (r < n && a[r][k] == 0)
                        ++r;
                    if (r == n)
                        return 0;
                    std::swap(a[k], a[r]);
                    sign = -sign;
                }
                for (size_t i = k + 1; i < n; ++i)
                    for (size_t j = k + 1; j < n; ++j)
                        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                prev = a[k][k];
            }
            return sign * a[n - 1][n - 1];
        }

        inline int integer_rank(std::vector<std::vector<mpz_class>> a)
        {
            // fraction-free elimination
            int rank = 0;
            const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
            for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c)
            {
                size_t p = rank;
                while (p < rows && a[p][c] == 0)
                    ++p;
                if (p == rows)
                    continue;
                std::swap(a[rank], a[p]);
                for (size_t i = rank + 1; i < rows; ++i)
                {
                    if (a[i][c] == 0)
                        continue;
                    const mpz_class f = a[i][c], g = a[rank][c];
                    for (size_t j = c; j < cols; ++j)
                        a[i][j] = a[i][j] * g - a[rank][j] * f;
                }
                ++rank;
            }
            return rank;
        }
    } // namespace detail

    // The images of U_0..U_{4m} (resp. U_0..U_{2m}) are independent and span the basis lattice.
    inline RankReport ring_ranks(int m)
    {
        RankReport r;
        const int nP = 4 * m + 1, nK = 2 * m + 1;
        std::vector<std::vector<mpz_class>> M(nP, std::vector<mpz_class>(nP));
        for (int k = 0; k < nP; ++k)
        {
            const FusionElement e = from_reduced(reduce_P(ChebyshevPoly::basis(k), m), m);
            for (int i = 0; i < nP; ++i)
                M[k][i] = static_cast<long>(e.mult[i]);
        }
        r.p_rank = detail::integer_rank(M);
        const mpz_class det = detail::bareiss_det(M);
        std::vector<std::vector<mpz_class>> K(nK, std::vector<mpz_class>(nK));
        for (int k = 0; k < nK; ++k)
        {
            const ChebyshevPoly red = grothendieck_reduce(ChebyshevPoly::basis(k), m);
            for (int i = 0; i < nK; ++i)
                K[k][i] = static_cast<long>(red[i]);
        }
        r.k_rank = detail::integer_rank(K);
        const mpz_class kdet = detail::bareiss_det(K);
        r.p_ok = r.p_rank == nP && abs(det) == 1;
        r.k_ok = r.k_rank == nK && abs(kdet) == 1;
        return r;
    }

} // namespace swm
