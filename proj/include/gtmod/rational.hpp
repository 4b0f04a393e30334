#ifndef GTMOD_RATIONAL_HPP
#define GTMOD_RATIONAL_HPP

#include <compare>
#include <utility>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gtmod
{

/// Exact rational number, always in lowest terms with a positive denominator.
/**
 * Thin value wrapper around GMP's mpq_class. The wrapper exists so the rest of
 * the library never sees GMP expression templates, and so that every value
 * leaving a constructor is canonical.
 */
class Rational
{
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}
    Rational(int v) : m_value(static_cast<long>(v)) {}
    Rational(long num, long den)
    {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        m_value = mpq_class(num, den);
        m_value.canonicalize();
    }
    explicit Rational(mpq_class v) : m_value(std::move(v))
    {
        m_value.canonicalize();
    }

    /// Parse "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        if (s.empty()) {
            throw std::invalid_argument("empty rational literal");
        }
        auto valid_int = [](std::string_view t, bool allow_sign) {
            if (!t.empty() && allow_sign && (t.front() == '-' || t.front() == '+')) {
                t.remove_prefix(1);
            }
            if (t.empty()) {
                return false;
            }
            for (char c : t) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            if (!valid_int(s, true)) {
                throw std::invalid_argument("malformed rational literal: " + s);
            }
        } else {
            if (!valid_int(std::string_view(s).substr(0, slash), true)
                || !valid_int(std::string_view(s).substr(slash + 1), false)) {
                throw std::invalid_argument("malformed rational literal: " + s);
            }
        }
        if (!s.empty() && s.front() == '+') {
            s.erase(0, 1);
        }
        mpq_class v;
        if (v.set_str(s, 10) != 0) {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
        if (v.get_den() == 0) {
            throw std::invalid_argument("rational literal with zero denominator: " + s);
        }
        return Rational(std::move(v));
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const
    {
        return m_value.get_str(10);
    }

    const mpq_class &value() const
    {
        return m_value;
    }
    mpz_class numerator() const
    {
        return m_value.get_num();
    }
    mpz_class denominator() const
    {
        return m_value.get_den();
    }

    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }

    /// Integer value; throws if the number is not an integer or does not fit.
    long to_long() const
    {
        if (!is_integer() || !m_value.get_num().fits_slong_p()) {
            throw std::domain_error("rational " + str() + " is not a machine integer");
        }
        return m_value.get_num().get_si();
    }

    Rational operator-() const
    {
        return Rational(mpq_class(-m_value), raw_tag{});
    }
    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("rational division by zero");
        }
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.str();
    }

private:
    struct raw_tag {};
    // GMP arithmetic on canonical operands yields canonical results.
    Rational(mpq_class v, raw_tag) : m_value(std::move(v)) {}

    mpq_class m_value;
};

inline Rational pow(const Rational &base, unsigned exponent)
{
    Rational r(1);
    for (unsigned e = 0; e < exponent; ++e) {
        r *= base;
    }
    return r;
}

inline bool is_zero(const Rational &r)
{
    return r.is_zero();
}

} // namespace gtmod

#endif
