#ifndef GTMOD_JET_HPP
#define GTMOD_JET_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace gtmod
{

class JetError : public std::runtime_error
{
public:
    enum class Kind { division_by_zero, pole_below_floor, insufficient_truncation };

    JetError(Kind kind, const std::string &what) : std::runtime_error(what), m_kind(kind) {}

    Kind kind() const
    {
        return m_kind;
    }

private:
    Kind m_kind;
};

/// Truncated Laurent series in one formal parameter e.
/**
 * A jet stores the coefficients of e^min_exp ... e^trunc_order exactly; every
 * exponent above trunc_order is unknown. Precision is tracked in absolute
 * terms: sums keep the smaller truncation order, products and quotients keep
 * the smaller relative precision (trunc_order - min_exp) of their operands.
 *
 * Canonical form: the coefficient at min_exp is nonzero. The zero jet has no
 * stored coefficients and min_exp == trunc_order + 1, i.e. it is known to
 * vanish up to its truncation order.
 *
 * A result whose leading exponent falls below the pole floor (default -4) is
 * rejected with JetError::pole_below_floor.
 */
class Jet
{
public:
    static constexpr int default_floor = -4;
    static constexpr int default_order = 2;

    Jet() : Jet(zero(default_order)) {}

    static Jet zero(int trunc_order, int floor = default_floor)
    {
        return Jet(trunc_order + 1, {}, trunc_order, floor);
    }
    static Jet constant(const Rational &c, int trunc_order = default_order,
                        int floor = default_floor)
    {
        return Jet(0, {c}, trunc_order, floor);
    }
    /// c * e^exponent, known up to trunc_order.
    static Jet monomial(const Rational &c, int exponent, int trunc_order = default_order,
                        int floor = default_floor)
    {
        return Jet(exponent, {c}, trunc_order, floor);
    }
    /// Coefficients for e^min_exp, e^(min_exp+1), ...; missing ones up to trunc_order are zero.
    static Jet from_coeffs(int min_exp, std::vector<Rational> coeffs, int trunc_order,
                           int floor = default_floor)
    {
        return Jet(min_exp, std::move(coeffs), trunc_order, floor);
    }

    /// Leading exponent; for the zero jet this is trunc_order + 1.
    int min_exp() const
    {
        return m_min_exp;
    }
    int trunc_order() const
    {
        return m_trunc;
    }
    int floor() const
    {
        return m_floor;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }

    /// Exact coefficient of e^k.
    Rational coeff(int k) const
    {
        if (k > m_trunc) {
            std::ostringstream ss;
            ss << "coefficient of e^" << k << " requested from a jet truncated at order " << m_trunc;
            throw JetError(JetError::Kind::insufficient_truncation, ss.str());
        }
        if (k < m_min_exp) {
            return Rational(0);
        }
        return m_coeffs[static_cast<std::size_t>(k - m_min_exp)];
    }

    /// True iff no nonzero coefficient sits at a negative exponent.
    bool is_regular() const
    {
        return is_zero() || m_min_exp >= 0;
    }

    /// Substitute e -> -e.
    Jet flip() const
    {
        Jet r = *this;
        for (std::size_t idx = 0; idx < r.m_coeffs.size(); ++idx) {
            if ((r.m_min_exp + static_cast<int>(idx)) % 2 != 0) {
                r.m_coeffs[idx] = -r.m_coeffs[idx];
            }
        }
        return r;
    }

    /// Formal derivative d/de.
    Jet derivative() const
    {
        if (is_zero()) {
            return zero(m_trunc - 1, m_floor);
        }
        std::vector<Rational> c(m_coeffs.size());
        for (std::size_t idx = 0; idx < m_coeffs.size(); ++idx) {
            c[idx] = m_coeffs[idx] * Rational(m_min_exp + static_cast<int>(idx));
        }
        return Jet(m_min_exp - 1, std::move(c), m_trunc - 1, m_floor - 1);
    }

    Jet operator-() const
    {
        Jet r = *this;
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }

    friend Jet operator+(const Jet &a, const Jet &b)
    {
        return add(a, b, false);
    }
    friend Jet operator-(const Jet &a, const Jet &b)
    {
        return add(a, b, true);
    }

    friend Jet operator*(const Jet &a, const Jet &b)
    {
        const int floor = std::max(a.m_floor, b.m_floor);
        const int trunc = std::min(a.m_trunc + b.m_min_exp, b.m_trunc + a.m_min_exp);
        if (a.is_zero() || b.is_zero()) {
            return zero(trunc, floor);
        }
        const int lead = a.m_min_exp + b.m_min_exp;
        const int len = trunc - lead + 1;
        std::vector<Rational> c(static_cast<std::size_t>(std::max(len, 0)));
        for (int p = 0; p < len; ++p) {
            for (int q = 0; q <= p; ++q) {
                const auto ia = static_cast<std::size_t>(q);
                const auto ib = static_cast<std::size_t>(p - q);
                if (ia < a.m_coeffs.size() && ib < b.m_coeffs.size()) {
                    c[static_cast<std::size_t>(p)] += a.m_coeffs[ia] * b.m_coeffs[ib];
                }
            }
        }
        return Jet(lead, std::move(c), trunc, floor);
    }

    friend Jet operator/(const Jet &a, const Jet &b)
    {
        if (b.is_zero()) {
            throw JetError(JetError::Kind::division_by_zero, "division by the zero jet");
        }
        const int floor = std::max(a.m_floor, b.m_floor);
        const int lead = a.m_min_exp - b.m_min_exp;
        const int rel = std::min(a.m_trunc - a.m_min_exp, b.m_trunc - b.m_min_exp);
        if (a.is_zero()) {
            return zero(a.m_trunc - b.m_min_exp, floor);
        }
        const auto len = static_cast<std::size_t>(rel + 1);
        std::vector<Rational> c(len);
        const Rational &b0 = b.m_coeffs.front();
        for (std::size_t p = 0; p < len; ++p) {
            Rational acc = p < a.m_coeffs.size() ? a.m_coeffs[p] : Rational(0);
            for (std::size_t q = 1; q <= p && q < b.m_coeffs.size(); ++q) {
                acc -= b.m_coeffs[q] * c[p - q];
            }
            c[p] = acc / b0;
        }
        return Jet(lead, std::move(c), lead + rel, floor);
    }

    // Scalars are exact, so they never reduce precision.
    friend Jet operator*(const Jet &a, const Rational &s)
    {
        if (s.is_zero()) {
            return zero(a.m_trunc, a.m_floor);
        }
        Jet r = a;
        for (auto &c : r.m_coeffs) {
            c *= s;
        }
        return r;
    }
    friend Jet operator*(const Rational &s, const Jet &a)
    {
        return a * s;
    }
    friend Jet operator/(const Jet &a, const Rational &s)
    {
        if (s.is_zero()) {
            throw JetError(JetError::Kind::division_by_zero, "jet divided by the zero scalar");
        }
        return a * (Rational(1) / s);
    }
    friend Jet operator/(const Rational &s, const Jet &b)
    {
        if (b.is_zero()) {
            throw JetError(JetError::Kind::division_by_zero, "division by the zero jet");
        }
        return constant(s, b.m_trunc - b.m_min_exp, b.m_floor) / b;
    }
    friend Jet operator+(const Jet &a, const Rational &s)
    {
        return a + constant(s, a.m_trunc, a.m_floor);
    }
    friend Jet operator+(const Rational &s, const Jet &a)
    {
        return a + s;
    }
    friend Jet operator-(const Jet &a, const Rational &s)
    {
        return a + (-s);
    }
    friend Jet operator-(const Rational &s, const Jet &a)
    {
        return (-a) + s;
    }

    Jet &operator+=(const Jet &o)
    {
        return *this = *this + o;
    }
    Jet &operator-=(const Jet &o)
    {
        return *this = *this - o;
    }
    Jet &operator*=(const Jet &o)
    {
        return *this = *this * o;
    }
    Jet &operator/=(const Jet &o)
    {
        return *this = *this / o;
    }

    /// Structural equality: same known window and same coefficients.
    friend bool operator==(const Jet &a, const Jet &b)
    {
        return a.m_min_exp == b.m_min_exp && a.m_trunc == b.m_trunc && a.m_coeffs == b.m_coeffs;
    }

    /// True iff the coefficients of e^lo ... e^hi agree (both jets must know them).
    bool agrees_with(const Jet &o, int lo, int hi) const
    {
        for (int k = lo; k <= hi; ++k) {
            if (coeff(k) != o.coeff(k)) {
                return false;
            }
        }
        return true;
    }

    std::string str() const
    {
        std::ostringstream ss;
        bool first = true;
        for (std::size_t idx = 0; idx < m_coeffs.size(); ++idx) {
            if (m_coeffs[idx].is_zero()) {
                continue;
            }
            const int e = m_min_exp + static_cast<int>(idx);
            if (!first) {
                ss << " + ";
            }
            first = false;
            ss << m_coeffs[idx];
            if (e != 0) {
                ss << "*e^" << e;
            }
        }
        if (first) {
            ss << "0";
        }
        ss << " + O(e^" << (m_trunc + 1) << ")";
        return ss.str();
    }

    const std::vector<Rational> &coeffs() const
    {
        return m_coeffs;
    }

private:
    Jet(int min_exp, std::vector<Rational> coeffs, int trunc, int floor)
        : m_min_exp(min_exp), m_coeffs(std::move(coeffs)), m_trunc(trunc), m_floor(floor)
    {
        canonicalize();
    }

    void canonicalize()
    {
        const int known = m_trunc - m_min_exp + 1;
        if (known <= 0) {
            m_coeffs.clear();
        } else if (m_coeffs.size() > static_cast<std::size_t>(known)) {
            m_coeffs.resize(static_cast<std::size_t>(known));
        }
        std::size_t lead = 0;
        while (lead < m_coeffs.size() && m_coeffs[lead].is_zero()) {
            ++lead;
        }
        if (lead == m_coeffs.size()) {
            m_coeffs.clear();
            m_min_exp = m_trunc + 1;
            return;
        }
        m_coeffs.erase(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        m_min_exp += static_cast<int>(lead);
        // Pad explicit zeros up to the truncation order.
        m_coeffs.resize(static_cast<std::size_t>(m_trunc - m_min_exp + 1));
        if (m_min_exp < m_floor) {
            std::ostringstream ss;
            ss << "pole of order " << -m_min_exp << " exceeds the floor e^" << m_floor;
            throw JetError(JetError::Kind::pole_below_floor, ss.str());
        }
    }

    static Jet add(const Jet &a, const Jet &b, bool subtract)
    {
        const int floor = std::max(a.m_floor, b.m_floor);
        const int trunc = std::min(a.m_trunc, b.m_trunc);
        const int lead = std::min(a.m_min_exp, b.m_min_exp);
        if (lead > trunc) {
            return zero(trunc, floor);
        }
        std::vector<Rational> c(static_cast<std::size_t>(trunc - lead + 1));
        for (int e = lead; e <= trunc; ++e) {
            Rational v = a.coeff(e);
            if (subtract) {
                v -= b.coeff(e);
            } else {
                v += b.coeff(e);
            }
            c[static_cast<std::size_t>(e - lead)] = std::move(v);
        }
        return Jet(lead, std::move(c), trunc, floor);
    }

    int m_min_exp;
    std::vector<Rational> m_coeffs;
    int m_trunc;
    int m_floor;
};

inline bool is_zero(const Jet &j)
{
    return j.is_zero();
}

} // namespace gtmod

#endif
