#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace swm
{

    namespace detail
    {
        inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
        {
            std::int64_t r;
            if (__builtin_add_overflow(a, b, &r))
                throw std::overflow_error("integer overflow in Chebyshev arithmetic");
            return r;
        }

        inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
        {
            std::int64_t r;
            if (__builtin_mul_overflow(a, b, &r))
                throw std::overflow_error("integer overflow in Chebyshev arithmetic");
            return r;
        }
    } // namespace detail

    // Integer polynomial in the Chebyshev-U basis: coeffs[k] multiplies U_k(A).
    class ChebyshevPoly
    {
    public:
        ChebyshevPoly() = default;
        explicit ChebyshevPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

        static ChebyshevPoly basis(int n, std::int64_t coeff = 1)
        {
            if (n < 0)
                throw std::invalid_argument("negative Chebyshev degree");
            std::vector<std::int64_t> c(n + 1, 0);
            c[n] = coeff;
            return ChebyshevPoly(std::move(c));
        }

        const std::vector<std::int64_t> &coeffs() const { return c_; }
        bool is_zero() const { return c_.empty(); }
        int degree() const { return static_cast<int>(c_.size()) - 1; }

        std::int64_t operator[](int k) const
        {
            return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
        }

        ChebyshevPoly &add_term(int k, std::int64_t v)
        {
            if (k < 0)
                throw std::invalid_argument("negative Chebyshev degree");
            if (k >= static_cast<int>(c_.size()))
                c_.resize(k + 1, 0);
            c_[k] = detail::checked_add(c_[k], v);
            trim();
            return *this;
        }

        friend ChebyshevPoly operator+(const ChebyshevPoly &a, const ChebyshevPoly &b)
        {
            std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
            for (int k = 0; k < static_cast<int>(r.size()); ++k)
                r[k] = detail::checked_add(a[k], b[k]);
            return ChebyshevPoly(std::move(r));
        }

        friend ChebyshevPoly operator-(const ChebyshevPoly &a, const ChebyshevPoly &b)
        {
            return a + b.scaled(-1);
        }

        ChebyshevPoly scaled(std::int64_t s) const
        {
            std::vector<std::int64_t> r(c_.size());
            for (std::size_t k = 0; k < c_.size(); ++k)
                r[k] = detail::checked_mul(c_[k], s);
            return ChebyshevPoly(std::move(r));
        }

        // Product via U_j U_k = sum_{i=0}^{min(j,k)} U_{j+k-2i}.
        friend ChebyshevPoly operator*(const ChebyshevPoly &a, const ChebyshevPoly &b)
        {
            if (a.is_zero() || b.is_zero())
                return {};
            std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
            for (int j = 0; j <= a.degree(); ++j)
            {
                if (a.c_[j] == 0)
                    continue;
                for (int k = 0; k <= b.degree(); ++k)
                {
                    if (b.c_[k] == 0)
                        continue;
                    const std::int64_t w = detail::checked_mul(a.c_[j], b.c_[k]);
                    for (int i = 0; i <= std::min(j, k); ++i)
                        r[j + k - 2 * i] = detail::checked_add(r[j + k - 2 * i], w);
                }
            }
            return ChebyshevPoly(std::move(r));
        }

        // A * p, using A U_k = U_{k+1} + U_{k-1}.
        ChebyshevPoly times_A() const
        {
            if (is_zero())
                return {};
            std::vector<std::int64_t> r(c_.size() + 1, 0);
            for (int k = 0; k <= degree(); ++k)
            {
                r[k + 1] = detail::checked_add(r[k + 1], c_[k]);
                if (k > 0)
                    r[k - 1] = detail::checked_add(r[k - 1], c_[k]);
            }
            return ChebyshevPoly(std::move(r));
        }

        // Monomial coefficients (index = power of A); for display and cross-checks.
        std::vector<std::int64_t> to_monomial() const;

        // Evaluate at a real A by summing U_k(A) from the three-term recurrence.
        double evaluate(double A) const
        {
            double u_prev = 0.0, u = 1.0, sum = 0.0;
            for (int k = 0; k <= degree(); ++k)
            {
                sum += static_cast<double>(c_[k]) * u;
                const double next = A * u - u_prev;
                u_prev = u;
                u = next;
            }
            return sum;
        }

        template <class C>
        C evaluate_as(const C &A) const
        {
            C u_prev(0), u(1), sum(0);
            for (int k = 0; k <= degree(); ++k)
            {
                sum += C(static_cast<double>(c_[k])) * u;
                C next = A * u - u_prev;
                u_prev = u;
                u = next;
            }
            return sum;
        }

        friend bool operator==(const ChebyshevPoly &a, const ChebyshevPoly &b) { return a.c_ == b.c_; }
        friend bool operator!=(const ChebyshevPoly &a, const ChebyshevPoly &b) { return !(a == b); }

        std::string to_string(const std::string &var = "U") const
        {
            if (is_zero())
                return "0";
            std::string s;
            for (int k = degree(); k >= 0; --k)
            {
                const std::int64_t v = c_[k];
                if (v == 0)
                    continue;
                const bool neg = v < 0;
                const std::int64_t av = neg ? -v : v;
                if (s.empty())
                    s += neg ? "-" : "";
                else
                    s += neg ? " - " : " + ";
                if (av != 1)
                    s += std::to_string(av);
                s += var + "_" + std::to_string(k);
            }
            return s;
        }

    private:
        void trim()
        {
            while (!c_.empty() && c_.back() == 0)
                c_.pop_back();
        }

        std::vector<std::int64_t> c_;
    };

    // Monomial coefficients of U_n(A) for n = 0..max_n.
    inline std::vector<std::vector<std::int64_t>> chebyshev_monomial_table(int max_n)
    {
        std::vector<std::vector<std::int64_t>> t;
        t.push_back({1});
        if (max_n >= 1)
            t.push_back({0, 1});
        for (int n = 2; n <= max_n; ++n)
        {
            std::vector<std::int64_t> r(n + 1, 0);
            for (int i = 0; i < n; ++i)
                r[i + 1] = detail::checked_add(r[i + 1], t[n - 1][i]);
            for (int i = 0; i < n - 1; ++i)
                r[i] = detail::checked_add(r[i], -t[n - 2][i]);
            t.push_back(std::move(r));
        }
        return t;
    }

    inline std::vector<std::int64_t> ChebyshevPoly::to_monomial() const
    {
        if (is_zero())
            return {};
        const auto table = chebyshev_monomial_table(degree());
        std::vector<std::int64_t> r(degree() + 1, 0);
        for (int k = 0; k <= degree(); ++k)
            for (int i = 0; i <= k; ++i)
                r[i] = detail::checked_add(r[i], detail::checked_mul(c_[k], table[k][i]));
        return r;
    }

    // U_n in the U-basis.
    inline ChebyshevPoly chebyshev_u(int n)
    {
        if (n < 0)
            throw std::invalid_argument("chebyshev_u: n must be nonnegative");
        return ChebyshevPoly::basis(n);
    }

    // U-basis expansion of U_j * U_k.
    inline ChebyshevPoly chebyshev_product(int j, int k)
    {
        if (j < 0 || k < 0)
            throw std::invalid_argument("chebyshev_product: degrees must be nonnegative");
        return ChebyshevPoly::basis(j) * ChebyshevPoly::basis(k);
    }

    inline std::string monomial_to_string(const std::vector<std::int64_t> &c, const std::string &var = "A")
    {
        std::string s;
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        {
            const std::int64_t v = c[k];
            if (v == 0)
                continue;
            const bool neg = v < 0;
            const std::int64_t av = neg ? -v : v;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (av != 1 || k == 0)
                s += std::to_string(av);
            if (k >= 1)
                s += var;
            if (k >= 2)
                s += "^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }

} // namespace swm
