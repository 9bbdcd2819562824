#pragma once

#include "swm/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swm
{

    enum class ModuleKind
    {
        Simple,
        Projective
    };

    // X_s (1 <= s <= 2m+1) or P_s (1 <= s <= 2m).
    struct ModuleLabel
    {
        ModuleKind kind;
        int s;
        int m;

        ModuleLabel(ModuleKind k, int s_, int m_) : kind(k), s(s_), m(m_)
        {
            if (m < 1)
                throw std::invalid_argument("m must be >= 1");
            const int hi = k == ModuleKind::Simple ? 2 * m + 1 : 2 * m;
            if (s < 1 || s > hi)
                throw std::invalid_argument("label index out of range");
        }

        static ModuleLabel X(int s, int m) { return {ModuleKind::Simple, s, m}; }
        static ModuleLabel P(int s, int m) { return {ModuleKind::Projective, s, m}; }

        bool is_simple() const { return kind == ModuleKind::Simple; }

        // position in the basis order X_1..X_{2m+1}, P_1..P_{2m}
        int index() const { return is_simple() ? s - 1 : 2 * m + s; }

        std::string name() const { return (is_simple() ? "X_" : "P_") + std::to_string(s); }

        bool operator==(const ModuleLabel &o) const { return kind == o.kind && s == o.s && m == o.m; }
    };

    inline std::vector<ModuleLabel> basis_labels(int m)
    {
        std::vector<ModuleLabel> out;
        for (int s = 1; s <= 2 * m + 1; ++s)
            out.push_back(ModuleLabel::X(s, m));
        for (int s = 1; s <= 2 * m; ++s)
            out.push_back(ModuleLabel::P(s, m));
        return out;
    }

    inline ModuleLabel label_at(int index, int m)
    {
        if (index < 0 || index > 4 * m)
            throw std::out_of_range("basis index");
        return index <= 2 * m ? ModuleLabel::X(index + 1, m) : ModuleLabel::P(index - 2 * m, m);
    }

    // Parses "X_3" / "P_2".
    inline ModuleLabel parse_label(const std::string &txt, int m)
    {
        if (txt.size() < 3 || (txt[0] != 'X' && txt[0] != 'P') || txt[1] != '_')
            throw std::invalid_argument("label must look like X_3 or P_2");
        const int s = std::stoi(txt.substr(2));
        return txt[0] == 'X' ? ModuleLabel::X(s, m) : ModuleLabel::P(s, m);
    }

    inline void require_m(int m)
    {
        if (m < 1)
            throw std::invalid_argument("m must be >= 1");
    }

    // 15/2 - 3(2m+1 + 1/(2m+1))
    inline Rational central_charge(int m)
    {
        require_m(m);
        const Rational p(2 * m + 1);
        Rational c = Rational(15, 2) - 3 * (p + 1 / p);
        c.canonicalize();
        return c;
    }

    // h_{r,s;n} = h_{r-n,s} = ((r-n)^2-1)(2m+1)/8 - ((r-n)s-1)/4 + (s^2-1)/(8(2m+1))
    inline Rational conformal_weight(long r, long s, long n, int m)
    {
        require_m(m);
        const long rr = r - n;
        const long p = 2 * m + 1;
        Rational h = Rational(Integer(rr * rr - 1) * p, 8) - Rational(rr * s - 1, 4) +
                     Rational(Integer(s * s - 1), Integer(8 * p));
        h.canonicalize();
        return h;
    }

    struct UnsupportedLabel : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    // Lowest conformal weight of a simple module.
    inline Rational min_weight(const ModuleLabel &L)
    {
        if (!L.is_simple())
            throw UnsupportedLabel("min_weight: projective labels have no single minimal weight here");
        if (L.s % 2 == 1)
            return conformal_weight(1, L.s, 0, L.m);
        return conformal_weight(1, L.s, -1, L.m);
    }

    struct WeightEntry
    {
        long multiplicity;
        Rational weight;
    };

    // Decomposition into Virasoro-type simple modules with sl2-type multiplicities.
    inline std::vector<WeightEntry> ns_decomposition(const ModuleLabel &L, int n_max)
    {
        if (!L.is_simple())
            throw UnsupportedLabel("ns_decomposition: simple labels only");
        if (n_max < 0)
            throw std::invalid_argument("n_max >= 0");
        std::vector<WeightEntry> out;
        if (L.s % 2 == 1)
        {
            for (int n = 0; n <= n_max; ++n)
                out.push_back({2 * n + 1, conformal_weight(1, L.s, -2 * n, L.m)});
        }
        else
        {
            for (int n = 1; n <= n_max; ++n)
                out.push_back({2 * n, conformal_weight(1, L.s, -2 * n + 1, L.m)});
        }
        return out;
    }

    // Block index in 1..m+1.
    inline int block_of(const ModuleLabel &L)
    {
        const int m = L.m;
        if (L.is_simple())
        {
            if (L.s == 2 * m + 1)
                return m + 1;
            if (L.s % 2 == 1)
                return (L.s - 1) / 2 + 1; // X_{2i+1}
            return m - L.s / 2 + 1;       // X_{2(m-i)}
        }
        if (L.s % 2 == 0)
            return m - L.s / 2 + 1; // P_{2i}
        return (L.s - 1) / 2 + 1;   // P_{2i+1}
    }

    // m 4-dimensional matrix blocks, m 2-dimensional ideals and one 1-dimensional ideal.
    inline int zhu_dimension(int m)
    {
        require_m(m);
        return 4 * m + 2 * m + 1;
    }

    struct RiemannScheme
    {
        std::vector<Rational> at0, at1, atinf;

        std::vector<Rational> all() const
        {
            std::vector<Rational> v = at0;
            v.insert(v.end(), at1.begin(), at1.end());
            v.insert(v.end(), atinf.begin(), atinf.end());
            return v;
        }
    };

    // Characteristic exponents rho_{11}, rho_{01}, rho_{10}, rho_{00}.
    inline std::vector<Rational> characteristic_exponents(int m)
    {
        require_m(m);
        const Integer p = 2 * m + 1;
        const Integer mm = m;
        auto q = [&](const Integer &n) { return make_rational(n, p); };
        return {q(mm * mm), q(mm * mm + 4 * mm + 1), q(1 - 3 * mm * mm), q(-3 * mm * mm)};
    }

    inline RiemannScheme riemann_exponents(int m)
    {
        RiemannScheme r;
        r.at0 = characteristic_exponents(m);
        r.at1 = r.at0;
        const Integer p = 2 * m + 1;
        r.atinf = {Rational(0), make_rational(1, p), make_rational(Integer(4 * m * m), p), Rational(p)};
        return r;
    }

} // namespace swm
