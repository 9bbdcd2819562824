#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace swm
{

    // Exact rational scalar; gmpxx keeps every result in lowest terms.
    using Rational = mpq_class;
    using Integer = mpz_class;

    inline Rational make_rational(long num, long den = 1)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    inline Rational make_rational(const Integer &num, const Integer &den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    inline std::string to_string(const Rational &r)
    {
        return r.get_str();
    }

    inline std::string numerator_string(const Rational &r)
    {
        return r.get_num().get_str();
    }

    inline std::string denominator_string(const Rational &r)
    {
        return r.get_den().get_str();
    }

    inline double to_double(const Rational &r)
    {
        return r.get_d();
    }

} // namespace swm
