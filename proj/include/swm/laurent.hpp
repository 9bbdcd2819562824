#pragma once

#include "rational.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace swm
{

    using cplx = std::complex<double>;

    namespace detail
    {
        inline bool coeff_is_zero(const Rational &r) { return r == 0; }
        inline bool coeff_is_zero(const cplx &c) { return c == cplx(0.0, 0.0); }

        inline std::string coeff_str(const Rational &r) { return r.get_str(); }
        inline std::string coeff_str(const cplx &c)
        {
            std::ostringstream os;
            os.precision(17);
            os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
            return os.str();
        }

        inline Rational from_int(const Rational *, long n) { return Rational(n); }
        inline cplx from_int(const cplx *, long n) { return cplx(static_cast<double>(n), 0.0); }
    } // namespace detail

    // Laurent polynomial in one variable (w - center).
    template <class T>
    class LaurentPoly1
    {
    public:
        LaurentPoly1() = default;
        explicit LaurentPoly1(int center) : center_(center) {}

        int center() const { return center_; }
        const std::map<int, T> &terms() const { return terms_; }

        void add(int p, const T &c)
        {
            auto it = terms_.find(p);
            if (it == terms_.end())
            {
                if (!detail::coeff_is_zero(c))
                    terms_.emplace(p, c);
                return;
            }
            it->second += c;
            if (detail::coeff_is_zero(it->second))
                terms_.erase(it);
        }

        T coeff(int p) const
        {
            auto it = terms_.find(p);
            return it == terms_.end() ? T(0) : it->second;
        }

        LaurentPoly1 derivative() const
        {
            LaurentPoly1 r(center_);
            for (const auto &[p, c] : terms_)
                if (p != 0)
                    r.add(p - 1, c * detail::from_int(static_cast<const T *>(nullptr), p));
            return r;
        }

        LaurentPoly1 scaled(const T &s) const
        {
            LaurentPoly1 r(center_);
            for (const auto &[p, c] : terms_)
                r.add(p, c * s);
            return r;
        }

        friend LaurentPoly1 operator-(const LaurentPoly1 &a, const LaurentPoly1 &b)
        {
            LaurentPoly1 r = a;
            for (const auto &[p, c] : b.terms_)
                r.add(p, -c);
            return r;
        }

        bool is_zero() const { return terms_.empty(); }

        friend bool operator==(const LaurentPoly1 &a, const LaurentPoly1 &b)
        {
            return a.center_ == b.center_ && a.terms_ == b.terms_;
        }

    private:
        int center_ = 0;
        std::map<int, T> terms_;
    };

    // Sparse Laurent polynomial in (u - x), (v - x) with x = center.
    // Terms are kept in lexicographic exponent order; zero coefficients are never stored.
    template <class T>
    class LaurentPoly2
    {
    public:
        using Key = std::pair<int, int>;

        LaurentPoly2() = default;
        explicit LaurentPoly2(int center) : center_(center) {}

        static LaurentPoly2 constant(const T &c, int center = 0)
        {
            LaurentPoly2 r(center);
            r.add(0, 0, c);
            return r;
        }

        static LaurentPoly2 monomial(int p, int q, const T &c, int center = 0)
        {
            LaurentPoly2 r(center);
            r.add(p, q, c);
            return r;
        }

        int center() const { return center_; }
        const std::map<Key, T> &terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }

        void add(int p, int q, const T &c)
        {
            const Key k{p, q};
            auto it = terms_.find(k);
            if (it == terms_.end())
            {
                if (!detail::coeff_is_zero(c))
                    terms_.emplace(k, c);
                return;
            }
            it->second += c;
            if (detail::coeff_is_zero(it->second))
                terms_.erase(it);
        }

        T coeff(int p, int q) const
        {
            auto it = terms_.find({p, q});
            return it == terms_.end() ? T(0) : it->second;
        }

        friend LaurentPoly2 operator+(const LaurentPoly2 &a, const LaurentPoly2 &b)
        {
            check_center(a, b);
            LaurentPoly2 r = a;
            for (const auto &[k, c] : b.terms_)
                r.add(k.first, k.second, c);
            return r;
        }

        friend LaurentPoly2 operator-(const LaurentPoly2 &a, const LaurentPoly2 &b)
        {
            check_center(a, b);
            LaurentPoly2 r = a;
            for (const auto &[k, c] : b.terms_)
                r.add(k.first, k.second, -c);
            return r;
        }

        friend LaurentPoly2 operator*(const LaurentPoly2 &a, const LaurentPoly2 &b)
        {
            check_center(a, b);
            LaurentPoly2 r(a.center_);
            for (const auto &[ka, ca] : a.terms_)
                for (const auto &[kb, cb] : b.terms_)
                    r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
            return r;
        }

        LaurentPoly2 scaled(const T &s) const
        {
            LaurentPoly2 r(center_);
            for (const auto &[k, c] : terms_)
                r.add(k.first, k.second, c * s);
            return r;
        }

        LaurentPoly2 d_du() const
        {
            LaurentPoly2 r(center_);
            for (const auto &[k, c] : terms_)
                if (k.first != 0)
                    r.add(k.first - 1, k.second, c * detail::from_int(static_cast<const T *>(nullptr), k.first));
            return r;
        }

        LaurentPoly2 d_dv() const
        {
            LaurentPoly2 r(center_);
            for (const auto &[k, c] : terms_)
                if (k.second != 0)
                    r.add(k.first, k.second - 1, c * detail::from_int(static_cast<const T *>(nullptr), k.second));
            return r;
        }

        // Swap the roles of u and v.
        LaurentPoly2 swapped() const
        {
            LaurentPoly2 r(center_);
            for (const auto &[k, c] : terms_)
                r.add(k.second, k.first, c);
            return r;
        }

        std::string to_string() const
        {
            if (terms_.empty())
                return "0";
            const std::string x = center_ == 0 ? "" : "-" + std::to_string(center_);
            std::string s;
            for (const auto &[k, c] : terms_)
            {
                if (!s.empty())
                    s += " + ";
                s += detail::coeff_str(c);
                if (k.first != 0)
                    s += "*(u" + x + ")^" + std::to_string(k.first);
                if (k.second != 0)
                    s += "*(v" + x + ")^" + std::to_string(k.second);
            }
            return s;
        }

        friend bool operator==(const LaurentPoly2 &a, const LaurentPoly2 &b)
        {
            return a.center_ == b.center_ && a.terms_ == b.terms_;
        }

    private:
        static void check_center(const LaurentPoly2 &a, const LaurentPoly2 &b)
        {
            if (a.center_ != b.center_)
                throw std::invalid_argument("Laurent polynomials with different centers");
        }

        int center_ = 0;
        std::map<Key, T> terms_;
    };

    // F(v, v) as a Laurent polynomial in (v - center).
    template <class T>
    LaurentPoly1<T> laurent_restrict_diagonal(const LaurentPoly2<T> &F)
    {
        LaurentPoly1<T> r(F.center());
        for (const auto &[k, c] : F.terms())
            r.add(k.first + k.second, c);
        return r;
    }

    // (1 - 1/rho) (dF/du)|_{u=v} == d/dv (F|_{u=v}), exactly.
    inline bool is_df_symmetric(const LaurentPoly2<Rational> &F, const Rational &rho)
    {
        if (rho == 0 || rho == 1)
            throw std::invalid_argument("rho must avoid {0, 1}");
        const Rational k = 1 - 1 / rho;
        const auto lhs = laurent_restrict_diagonal(F.d_du()).scaled(k);
        const auto rhs = laurent_restrict_diagonal(F).derivative();
        return (lhs - rhs).is_zero();
    }

    // Floating version: coefficientwise comparison with a relative tolerance.
    inline bool is_df_symmetric(const LaurentPoly2<cplx> &F, const cplx &rho, double tol = 1e-12)
    {
        if (std::abs(rho) == 0.0 || std::abs(rho - 1.0) == 0.0)
            throw std::invalid_argument("rho must avoid {0, 1}");
        const cplx k = 1.0 - 1.0 / rho;
        const auto lhs = laurent_restrict_diagonal(F.d_du()).scaled(k);
        const auto rhs = laurent_restrict_diagonal(F).derivative();
        double scale = 1.0;
        for (const auto &[p, c] : F.terms())
            scale = std::max(scale, std::abs(c));
        for (const auto &[p, c] : (lhs - rhs).terms())
            if (std::abs(c) > tol * scale)
                return false;
        return true;
    }

    inline LaurentPoly2<cplx> to_complex(const LaurentPoly2<Rational> &F)
    {
        LaurentPoly2<cplx> r(F.center());
        for (const auto &[k, c] : F.terms())
            r.add(k.first, k.second, cplx(c.get_d(), 0.0));
        return r;
    }

} // namespace swm
