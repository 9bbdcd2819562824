#pragma once

#include "swm/fuchsian.hpp"
#include "swm/laurent.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/mpfr.hpp>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace swm
{

    using BigFloat = boost::multiprecision::mpfr_float;

    // Sets the working precision (bits) for new BigFloat values; restores on exit.
    class PrecisionGuard
    {
    public:
        explicit PrecisionGuard(int bits) : saved_(BigFloat::default_precision())
        {
            if (bits < 53)
                throw std::invalid_argument("precision must be >= 53 bits");
            BigFloat::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1);
        }
        ~PrecisionGuard() { BigFloat::default_precision(saved_); }
        PrecisionGuard(const PrecisionGuard &) = delete;
        PrecisionGuard &operator=(const PrecisionGuard &) = delete;

    private:
        unsigned saved_;
    };

    inline BigFloat to_bigfloat(const Rational &q)
    {
        BigFloat r;
        mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    // ---------- exact matrices over Laurent polynomials in (c, c') ----------

    using Sym = LaurentPoly2<Rational>;
    using SymMatrix = std::array<std::array<Sym, 4>, 4>;

    namespace detail
    {
        inline Sym sym_c(int p, int q, const Rational &k) { return Sym::monomial(p, q, k); }
    } // namespace detail

    // Involutory matrix in the variables c (first) and c' (second).
    inline SymMatrix fourrel_matrix()
    {
        using detail::sym_c;
        const Rational one(1);
        const Sym icc = sym_c(-1, -1, one);                        // (cc')^-1
        const Sym cmi = sym_c(1, 0, one) - sym_c(-1, 0, one);      // c - c^-1
        const Sym cpmi = sym_c(0, 1, one) - sym_c(0, -1, one);     // c' - c'^-1
        const Sym ic = sym_c(-1, 0, one), icp = sym_c(0, -1, one); // c^-1, c'^-1
        const Sym zero;
        SymMatrix C;
        C[0] = {icc, zero - icc, zero - icc, icc};
        C[1] = {(zero - cmi) * icp, zero - icc, cmi * icp, icc};
        C[2] = {zero - ic * cpmi, ic * cpmi, zero - icc, icc};
        C[3] = {cmi * cpmi, ic * cpmi, cmi * icp, icc};
        return C;
    }

    // The displayed connection matrix as a Laurent polynomial in c alone.
    inline SymMatrix paper_connection_matrix(int m)
    {
        require_m(m);
        using detail::sym_c;
        const Rational h = Rational(m % 2 == 0 ? 1 : -1, 2);
        const Sym ic = sym_c(-1, 0, h), c = sym_c(1, 0, h), zero;
        const Sym cmi = c - ic;
        auto k = [&](int n, const Sym &s) { return s.scaled(Rational(n)); };
        SymMatrix M;
        M[0] = {ic, zero - ic, zero - ic, ic};
        M[1] = {zero - cmi, zero - ic, cmi, ic};
        M[2] = {k(-3, ic), k(3, ic), zero - ic, ic};
        M[3] = {k(3, cmi), k(3, ic), cmi, ic};
        return M;
    }

    inline SymMatrix sym_mul(const SymMatrix &a, const SymMatrix &b)
    {
        SymMatrix r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    r[i][j] = r[i][j] + a[i][k] * b[k][j];
        return r;
    }

    inline bool sym_is_identity(const SymMatrix &a)
    {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!(a[i][j] == (i == j ? Sym::constant(Rational(1)) : Sym())))
                    return false;
        return true;
    }

    // F(u, v) with v fixed to a rational constant.
    inline Sym substitute_second(const Sym &F, const Rational &v)
    {
        Sym r;
        for (const auto &[k, c] : F.terms())
        {
            Rational pw = 1;
            const Rational base = k.second >= 0 ? v : 1 / v;
            for (int i = 0; i < std::abs(k.second); ++i)
                pw *= base;
            r = r + Sym::monomial(k.first, 0, c * pw);
        }
        return r;
    }

    inline SymMatrix substitute_second(const SymMatrix &A, const Rational &v)
    {
        SymMatrix r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r[i][j] = substitute_second(A[i][j], v);
        return r;
    }

    template <class T>
    T sym_evaluate(const Sym &F, const T &u, const T &v)
    {
        using std::pow;
        T s = 0;
        for (const auto &[k, c] : F.terms())
            s += T(to_double(c)) * T(pow(u, k.first)) * T(pow(v, k.second));
        return s;
    }

    inline Rational sym_evaluate_exact(const Sym &F, const Rational &u, const Rational &v)
    {
        auto pw = [](const Rational &x, int n) {
            Rational r = 1;
            const Rational b = n >= 0 ? x : 1 / x;
            for (int i = 0; i < std::abs(n); ++i)
                r *= b;
            return r;
        };
        Rational s = 0;
        for (const auto &[k, c] : F.terms())
            s += c * pw(u, k.first) * pw(v, k.second);
        return s;
    }

    // c = 2 cos(pi m / (2m+1))
    inline double connection_c(int m) { return 2 * std::cos(M_PI * m / (2.0 * m + 1)); }

    inline Eigen::Matrix4d paper_matrix_numeric(int m)
    {
        const SymMatrix M = paper_connection_matrix(m);
        const double c = connection_c(m);
        Eigen::Matrix4d out;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                out(i, j) = sym_evaluate<double>(M[i][j], c, 1.0);
        return out;
    }

    struct ReducedSubspaceReport
    {
        bool ok = false;
        std::array<std::array<Sym, 2>, 2> block; // computed 2x2 matrix in c
    };

    // Row sums (1,1)+(1,0) and (0,1)+(0,0) of M act on the 2D span of the same sums.
    inline ReducedSubspaceReport reduced_subspace_check(int m)
    {
        const SymMatrix M = paper_connection_matrix(m);
        ReducedSubspaceReport r;
        std::array<Sym, 4> r1, r2;
        for (int j = 0; j < 4; ++j)
        {
            r1[j] = M[0][j] + M[2][j];
            r2[j] = M[1][j] + M[3][j];
        }
        const bool closed = r1[0] == r1[2] && r1[1] == r1[3] && r2[0] == r2[2] && r2[1] == r2[3];
        r.block = {{{r1[0], r1[1]}, {r2[0], r2[1]}}};
        const Rational s(m % 2 == 0 ? 1 : -1);
        const Sym ic = Sym::monomial(-1, 0, s), c = Sym::monomial(1, 0, s);
        const bool matches = r.block[0][0] == Sym() - ic && r.block[0][1] == ic && r.block[1][0] == c - ic && r.block[1][1] == ic;
        // block squared is the identity
        bool inv = true;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
            {
                const Sym e = r.block[i][0] * r.block[0][j] + r.block[i][1] * r.block[1][j];
                inv = inv && e == (i == j ? Sym::constant(Rational(1)) : Sym());
            }
        r.ok = closed && matches && inv;
        return r;
    }

    // ---------- numerical connection matrix ----------

    struct ConnectionConfig
    {
        int n_terms = 400;
        double matching_point = 0.5;
        int precision_bits = 128;
        double tolerance = 1e-6;
        double fallback_tolerance = 1e-4;
        double zero_tolerance = 1e-8;
        double max_condition = 1e25;
    };

    struct IllConditioned : std::runtime_error
    {
        double condition;
        IllConditioned(const std::string &w, double c) : std::runtime_error(w), condition(c) {}
    };

    struct GaugeFit
    {
        bool found = false;
        double residual = 0;      // smallest singular value relative to largest
        double normalized_det = 0; // min(|det G0|, |det G1|) of the best null combination
        Eigen::Matrix4d N_alt = Eigen::Matrix4d::Zero();
    };

    struct ConnectionResult
    {
        int m = 1;
        Eigen::Matrix4d numeric_matrix;
        Eigen::Matrix4d paper_matrix;
        double condition = 0;
        double cross_ratio_residual = 0;     // resonance gauge (free coefficient 0)
        bool zero_pattern_ok = false;
        GaugeFit gauge;                      // alternate gauge fit against M
        double alt_cross_ratio_residual = 1; // cross ratios of the alternate-gauge matrix
        bool alt_zero_pattern_ok = false;
        GaugeFit transposed_gauge;           // diagnostic: same fit against M^T
        bool pass = false;
        std::string basis_used;              // "resonance" or "alternate"
    };

    // Max over index quadruples of the relative cross-ratio mismatch, over entries where M is nonzero.
    inline double cross_ratio_residual(const Eigen::Matrix4d &N, const Eigen::Matrix4d &M)
    {
        const double mmax = M.cwiseAbs().maxCoeff();
        auto nz = [&](int a, int b) { return std::abs(M(a, b)) > 1e-12 * mmax; };
        double worst = 0;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                for (int j = 0; j < 4; ++j)
                    for (int l = 0; l < 4; ++l)
                    {
                        if (!(nz(i, j) && nz(k, l) && nz(i, l) && nz(k, j)))
                            continue;
                        const double a = N(i, j) * N(k, l) * M(i, l) * M(k, j);
                        const double b = N(i, l) * N(k, j) * M(i, j) * M(k, l);
                        const double den = std::abs(a) + std::abs(b);
                        if (den == 0)
                            continue;
                        worst = std::max(worst, std::abs(a - b) / den);
                    }
        return worst;
    }

    // N small (relative to its row and column) exactly where M vanishes.
    inline bool zero_pattern_matches(const Eigen::Matrix4d &N, const Eigen::Matrix4d &M, double tol)
    {
        const double mmax = M.cwiseAbs().maxCoeff();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
            {
                const double scale = std::max(N.row(i).cwiseAbs().maxCoeff(), N.col(j).cwiseAbs().maxCoeff());
                const bool n_zero = std::abs(N(i, j)) <= tol * scale;
                const bool m_zero = std::abs(M(i, j)) <= 1e-12 * mmax;
                if (n_zero != m_zero)
                    return false;
            }
        return true;
    }

    // Solve G0 N = T G1 with G0, G1 supported on the diagonal plus the resonant slots
    // (1,0)->(1,1) and (0,0)->(0,1); G = D U with U unipotent gives N_alt = U0 N U1^-1.
    inline GaugeFit fit_resonant_gauge(const Eigen::Matrix4d &N, const Eigen::Matrix4d &T)
    {
        static const std::array<std::pair<int, int>, 6> slots{{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {2, 0}, {3, 1}}};
        Eigen::Matrix<double, 16, 12> A = Eigen::Matrix<double, 16, 12>::Zero();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int p = 0; p < 6; ++p)
                {
                    const auto [a, b] = slots[p];
                    if (a == i)
                        A(4 * i + j, p) += N(b, j);
                    if (b == j)
                        A(4 * i + j, 6 + p) -= T(i, a);
                }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
        const auto &S = svd.singularValues();
        const Eigen::MatrixXd V = svd.matrixV();
        GaugeFit g;
        g.residual = S(11) / S(0);
        // null space: singular values below a relative threshold
        std::vector<Eigen::VectorXd> null;
        for (int k = 11; k >= 0 && S(k) <= 1e-9 * S(0); --k)
            null.push_back(V.col(k));
        if (null.empty())
            null.push_back(V.col(11));
        auto build = [&](const Eigen::VectorXd &v, Eigen::Matrix4d &G0, Eigen::Matrix4d &G1) {
            G0.setZero();
            G1.setZero();
            for (int p = 0; p < 6; ++p)
            {
                G0(slots[p].first, slots[p].second) = v(p);
                G1(slots[p].first, slots[p].second) = v(6 + p);
            }
        };
        // scan combinations of the null space for the least degenerate gauge
        Eigen::VectorXd best;
        double best_det = -1;
        const int steps = null.size() == 1 ? 1 : 720;
        for (int s = 0; s < steps; ++s)
        {
            Eigen::VectorXd v = null[0];
            if (null.size() > 1)
            {
                const double th = M_PI * s / steps;
                v = std::cos(th) * null[0] + std::sin(th) * null[1];
            }
            v.normalize();
            Eigen::Matrix4d G0, G1;
            build(v, G0, G1);
            const double d = std::min(std::abs(G0.determinant()), std::abs(G1.determinant()));
            if (d > best_det)
            {
                best_det = d;
                best = v;
            }
        }
        g.normalized_det = best_det;
        g.found = g.residual <= 1e-9 && best_det > 1e-8;
        if (g.found)
        {
            Eigen::Matrix4d G0, G1;
            build(best, G0, G1);
            const Eigen::Matrix4d U0 = G0.diagonal().asDiagonal().inverse() * G0;
            const Eigen::Matrix4d U1 = G1.diagonal().asDiagonal().inverse() * G1;
            g.N_alt = U0 * N * U1.inverse();
        }
        return g;
    }

    namespace detail
    {
        // rows: solutions in exponent order; columns: value and z-derivatives 1..3 at z = x0
        inline std::array<std::array<BigFloat, 4>, 4> wronskian_rows(const FuchsianOperator &op, int base, const BigFloat &z0,
                                                                     int n_terms)
        {
            std::array<std::array<BigFloat, 4>, 4> W;
            const BigFloat x = base == 0 ? z0 : BigFloat(1) - z0;
            const BigFloat logx = log(x);
            const auto exps = characteristic_exponents(op.m);
            for (int i = 0; i < 4; ++i)
            {
                const FrobeniusSolution sol = frobenius_series(op, base, exps[i], n_terms);
                const BigFloat rho = to_bigfloat(exps[i]);
                for (auto &w : W[i])
                    w = 0;
                for (int k = 0; k < n_terms; ++k)
                {
                    if (sol.coefficients[k] == 0)
                        continue;
                    BigFloat ck = to_bigfloat(sol.coefficients[k]);
                    if (base == 1 && (k % 2))
                        ck = -ck;
                    const BigFloat e = rho + k;
                    for (int dv = 0; dv < 4; ++dv)
                    {
                        BigFloat term = ck * falling_t<BigFloat>(e, dv) * exp((e - dv) * logx);
                        if (base == 1 && (dv % 2))
                            term = -term;
                        W[i][dv] += term;
                    }
                }
            }
            return W;
        }

        // X = A B^-1 for 4x4 BigFloat matrices (Gaussian elimination on B^T X^T = A^T).
        inline std::array<std::array<BigFloat, 4>, 4> right_divide(const std::array<std::array<BigFloat, 4>, 4> &A,
                                                                   const std::array<std::array<BigFloat, 4>, 4> &B)
        {
            std::array<std::array<BigFloat, 8>, 4> aug;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                {
                    aug[i][j] = B[j][i];
                    aug[i][4 + j] = A[j][i];
                }
            for (int c = 0; c < 4; ++c)
            {
                int piv = c;
                for (int r = c + 1; r < 4; ++r)
                    if (abs(aug[r][c]) > abs(aug[piv][c]))
                        piv = r;
                std::swap(aug[c], aug[piv]);
                for (int r = 0; r < 4; ++r)
                {
                    if (r == c)
                        continue;
                    const BigFloat f = aug[r][c] / aug[c][c];
                    for (int k = c; k < 8; ++k)
                        aug[r][k] -= f * aug[c][k];
                }
            }
            std::array<std::array<BigFloat, 4>, 4> X;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    X[j][i] = aug[i][4 + j] / aug[i][i];
            return X;
        }
    } // namespace detail

    inline ConnectionResult connection_matrix(int m, const ConnectionConfig &cfg = {})
    {
        require_m(m);
        if (!(cfg.matching_point > 0 && cfg.matching_point < 1))
            throw std::invalid_argument("matching point must lie in (0,1)");
        if (cfg.n_terms < 16)
            throw std::invalid_argument("n_terms must be >= 16");
        PrecisionGuard guard(cfg.precision_bits);
        const FuchsianOperator op = build_operator(m);
        const BigFloat z0 = BigFloat(cfg.matching_point);
        const auto W0 = detail::wronskian_rows(op, 0, z0, cfg.n_terms);
        const auto W1 = detail::wronskian_rows(op, 1, z0, cfg.n_terms);

        ConnectionResult r;
        r.m = m;
        Eigen::Matrix4d W1d;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                W1d(i, j) = static_cast<double>(W1[i][j]);
        // column scaling removes the trivial derivative-order spread
        Eigen::Matrix4d W1s = W1d;
        for (int j = 0; j < 4; ++j)
            W1s.col(j) /= W1d.col(j).cwiseAbs().maxCoeff();
        Eigen::JacobiSVD<Eigen::Matrix4d> svd(W1s);
        r.condition = svd.singularValues()(0) / svd.singularValues()(3);
        if (!(r.condition < cfg.max_condition))
            throw IllConditioned("matching matrix is ill-conditioned", r.condition);

        const auto N = detail::right_divide(W0, W1);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r.numeric_matrix(i, j) = static_cast<double>(N[i][j]);
        r.paper_matrix = paper_matrix_numeric(m);

        r.cross_ratio_residual = cross_ratio_residual(r.numeric_matrix, r.paper_matrix);
        r.zero_pattern_ok = zero_pattern_matches(r.numeric_matrix, r.paper_matrix, cfg.zero_tolerance);
        r.gauge = fit_resonant_gauge(r.numeric_matrix, r.paper_matrix);
        if (r.gauge.found)
        {
            r.alt_cross_ratio_residual = cross_ratio_residual(r.gauge.N_alt, r.paper_matrix);
            r.alt_zero_pattern_ok = zero_pattern_matches(r.gauge.N_alt, r.paper_matrix, cfg.zero_tolerance);
        }
        r.transposed_gauge = fit_resonant_gauge(r.numeric_matrix, r.paper_matrix.transpose());

        if (r.cross_ratio_residual < cfg.tolerance && r.zero_pattern_ok)
        {
            r.pass = true;
            r.basis_used = "resonance";
        }
        else if (r.gauge.found && r.alt_cross_ratio_residual < cfg.fallback_tolerance && r.alt_zero_pattern_ok)
        {
            r.pass = true;
            r.basis_used = "alternate";
        }
        else
            r.basis_used = r.gauge.found ? "alternate" : "resonance";
        return r;
    }

} // namespace swm
