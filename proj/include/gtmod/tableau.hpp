#ifndef GTMOD_TABLEAU_HPP
#define GTMOD_TABLEAU_HPP

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace gtmod
{

/// Entry (k, i) of a tableau: row k in [1, n], column i in [1, k].
struct Position {
    int k;
    int i;

    friend auto operator<=>(const Position &, const Position &) = default;
};

inline int tableau_size(int n)
{
    return n * (n + 1) / 2;
}

inline bool valid_position(int n, int k, int i)
{
    return 1 <= i && i <= k && k <= n;
}

/// Row-major storage offset of (k, i).
inline std::size_t flat_index(int k, int i)
{
    return static_cast<std::size_t>(k * (k - 1) / 2 + (i - 1));
}

/// The enumeration x_phi(k,i) = lambda_{k,i}, phi(k,i) = (k - i + 1) + (n - i)(n - i + 1)/2.
/**
 * Walks the columns from the right: x_1 = lambda_{n,n}, then lambda_{n-1,n-1},
 * lambda_{n,n-1}, and so on. Every interlacing inequality then compares an
 * entry with a smaller-numbered neighbour.
 */
inline int phi_index(int k, int i, int n)
{
    if (n < 1 || !valid_position(n, k, i)) {
        throw InputError("invalid tableau position (" + std::to_string(k) + ","
                         + std::to_string(i) + ") for n=" + std::to_string(n));
    }
    return (k - i + 1) + (n - i) * (n - i + 1) / 2;
}

/// A Gelfand-Tsetlin tableau of size n with entries in Field.
/**
 * Field is Rational for honest points of C^N restricted to Q, and Jet for
 * points moving along a one-parameter path.
 */
template <class Field>
class BasicTableau
{
public:
    BasicTableau() = default;
    BasicTableau(int n, Field fill) : m_n(n), m_entries(static_cast<std::size_t>(tableau_size(n)), fill)
    {
        if (n < 1) {
            throw InputError("tableau size must be positive");
        }
    }

    /// Rows listed top (row n) first, row k having k entries.
    static BasicTableau from_rows(const std::vector<std::vector<Field>> &rows)
    {
        const int n = static_cast<int>(rows.size());
        if (n < 1) {
            throw InputError("tableau needs at least one row");
        }
        BasicTableau t;
        t.m_n = n;
        t.m_entries.resize(static_cast<std::size_t>(tableau_size(n)));
        for (int r = 0; r < n; ++r) {
            const int k = n - r;
            if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != k) {
                throw InputError("row " + std::to_string(k) + " must have " + std::to_string(k)
                                 + " entries");
            }
            for (int i = 1; i <= k; ++i) {
                t.m_entries[flat_index(k, i)] = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)];
            }
        }
        return t;
    }

    int n() const
    {
        return m_n;
    }

    const Field &at(int k, int i) const
    {
        check(k, i);
        return m_entries[flat_index(k, i)];
    }
    const Field &at(Position p) const
    {
        return at(p.k, p.i);
    }
    void set(int k, int i, Field value)
    {
        check(k, i);
        m_entries[flat_index(k, i)] = std::move(value);
    }

    std::vector<std::vector<Field>> rows() const
    {
        std::vector<std::vector<Field>> out;
        for (int k = m_n; k >= 1; --k) {
            std::vector<Field> row;
            for (int i = 1; i <= k; ++i) {
                row.push_back(at(k, i));
            }
            out.push_back(std::move(row));
        }
        return out;
    }

    const std::vector<Field> &entries() const
    {
        return m_entries;
    }

    friend bool operator==(const BasicTableau &, const BasicTableau &) = default;
    friend auto operator<=>(const BasicTableau &a, const BasicTableau &b)
    {
        if (auto c = a.m_n <=> b.m_n; c != 0) {
            return c;
        }
        return a.m_entries <=> b.m_entries;
    }

private:
    void check(int k, int i) const
    {
        if (!valid_position(m_n, k, i)) {
            throw InputError("invalid tableau position (" + std::to_string(k) + ","
                             + std::to_string(i) + ") for n=" + std::to_string(m_n));
        }
    }

    int m_n = 0;
    std::vector<Field> m_entries;
};

using Tableau = BasicTableau<Rational>;

/// Integer shift in Z^N_0: the top row is identically zero.
class ShiftVector
{
public:
    ShiftVector() = default;
    explicit ShiftVector(int n) : m_n(n), m_entries(static_cast<std::size_t>(tableau_size(n)), 0)
    {
        if (n < 1) {
            throw InputError("shift vector size must be positive");
        }
    }

    /// delta^{k,i}
    static ShiftVector delta(int n, int k, int i)
    {
        ShiftVector z(n);
        z.set(k, i, 1);
        return z;
    }

    /// Rows n-1 down to 1 (the top row is implied zero).
    static ShiftVector from_rows(int n, const std::vector<std::vector<long>> &rows)
    {
        if (static_cast<int>(rows.size()) != n - 1) {
            throw InputError("shift vector for n=" + std::to_string(n) + " needs "
                             + std::to_string(n - 1) + " rows");
        }
        ShiftVector z(n);
        for (int r = 0; r < n - 1; ++r) {
            const int k = n - 1 - r;
            if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != k) {
                throw InputError("shift row " + std::to_string(k) + " must have "
                                 + std::to_string(k) + " entries");
            }
            for (int i = 1; i <= k; ++i) {
                z.set(k, i, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)]);
            }
        }
        return z;
    }

    int n() const
    {
        return m_n;
    }
    long at(int k, int i) const
    {
        check(k, i);
        return m_entries[flat_index(k, i)];
    }
    void set(int k, int i, long value)
    {
        check(k, i);
        if (k == m_n && value != 0) {
            throw InputError("shift vectors have a zero top row");
        }
        m_entries[flat_index(k, i)] = value;
    }

    /// Rows n-1 down to 1.
    std::vector<std::vector<long>> rows() const
    {
        std::vector<std::vector<long>> out;
        for (int k = m_n - 1; k >= 1; --k) {
            std::vector<long> row;
            for (int i = 1; i <= k; ++i) {
                row.push_back(at(k, i));
            }
            out.push_back(std::move(row));
        }
        return out;
    }

    long l1_norm() const
    {
        long s = 0;
        for (long e : m_entries) {
            s += std::labs(e);
        }
        return s;
    }

    ShiftVector operator-() const
    {
        ShiftVector r = *this;
        for (auto &e : r.m_entries) {
            e = -e;
        }
        return r;
    }
    friend ShiftVector operator+(ShiftVector a, const ShiftVector &b)
    {
        a.require_same(b);
        for (std::size_t idx = 0; idx < a.m_entries.size(); ++idx) {
            a.m_entries[idx] += b.m_entries[idx];
        }
        return a;
    }
    friend ShiftVector operator-(const ShiftVector &a, const ShiftVector &b)
    {
        return a + (-b);
    }

    friend bool operator==(const ShiftVector &, const ShiftVector &) = default;
    friend auto operator<=>(const ShiftVector &, const ShiftVector &) = default;

private:
    void check(int k, int i) const
    {
        if (!valid_position(m_n, k, i)) {
            throw InputError("invalid shift position (" + std::to_string(k) + ","
                             + std::to_string(i) + ") for n=" + std::to_string(m_n));
        }
    }
    void require_same(const ShiftVector &o) const
    {
        if (m_n != o.m_n) {
            throw InputError("shift vector size mismatch");
        }
    }

    int m_n = 0;
    std::vector<long> m_entries;
};

/// The fixed singular pair (k,i), (k,j) with 1 <= i < j <= k < n.
struct SingularPairSpec {
    int k;
    int i;
    int j;

    bool valid_for(int n) const
    {
        return 1 <= i && i < j && j <= k && k < n;
    }
    void validate(int n) const
    {
        if (!valid_for(n)) {
            throw InputError("singular pair (" + std::to_string(k) + "," + std::to_string(i) + ","
                             + std::to_string(j) + ") needs 1 <= i < j <= k < n=" + std::to_string(n));
        }
    }

    friend auto operator<=>(const SingularPairSpec &, const SingularPairSpec &) = default;
};

struct Classification {
    bool standard = false;
    bool generic = false;
    bool integral = false;
    std::vector<SingularPairSpec> singular_pairs;
    std::vector<SingularPairSpec> critical_pairs;
    bool is_1_singular = false;
    bool is_1_critical = false;
};

/// Standard: for 2 <= k <= n and 1 <= i < k, v_{k,i} - v_{k-1,i} in Z>=0 and v_{k-1,i} - v_{k,i+1} in Z>0.
inline bool is_standard(const Tableau &v)
{
    for (int k = 2; k <= v.n(); ++k) {
        for (int i = 1; i < k; ++i) {
            const Rational upper = v.at(k, i) - v.at(k - 1, i);
            const Rational lower = v.at(k - 1, i) - v.at(k, i + 1);
            if (!upper.is_integer() || upper.sign() < 0) {
                return false;
            }
            if (!lower.is_integer() || lower.sign() <= 0) {
                return false;
            }
        }
    }
    return true;
}

/// Integrality, standardness and the singular/critical pairs of rows k < n.
inline Classification classify(const Tableau &v)
{
    Classification c;
    c.integral = true;
    for (const auto &e : v.entries()) {
        c.integral = c.integral && e.is_integer();
    }
    c.standard = is_standard(v);
    for (int k = 1; k < v.n(); ++k) {
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                const Rational d = v.at(k, i) - v.at(k, j);
                if (d.is_integer()) {
                    c.singular_pairs.push_back({k, i, j});
                    if (d.is_zero()) {
                        c.critical_pairs.push_back({k, i, j});
                    }
                }
            }
        }
    }
    c.generic = c.singular_pairs.empty();
    c.is_1_singular = c.singular_pairs.size() == 1;
    c.is_1_critical = c.critical_pairs.size() == 1;
    return c;
}

inline Tableau apply_shift(const Tableau &v, const ShiftVector &z)
{
    if (v.n() != z.n()) {
        throw InputError("tableau and shift vector sizes differ");
    }
    Tableau r = v;
    for (int k = 1; k < v.n(); ++k) {
        for (int i = 1; i <= k; ++i) {
            if (z.at(k, i) != 0) {
                r.set(k, i, v.at(k, i) + Rational(z.at(k, i)));
            }
        }
    }
    return r;
}

/// tau swaps the entries at (k,i) and (k,j).
inline ShiftVector tau_apply(const ShiftVector &z, const SingularPairSpec &p)
{
    p.validate(z.n());
    ShiftVector r = z;
    r.set(p.k, p.i, z.at(p.k, p.j));
    r.set(p.k, p.j, z.at(p.k, p.i));
    return r;
}

template <class Field>
BasicTableau<Field> tau_apply(const BasicTableau<Field> &v, const SingularPairSpec &p)
{
    p.validate(v.n());
    BasicTableau<Field> r = v;
    r.set(p.k, p.i, v.at(p.k, p.j));
    r.set(p.k, p.j, v.at(p.k, p.i));
    return r;
}

inline bool is_tau_fixed(const ShiftVector &z, const SingularPairSpec &p)
{
    return z.at(p.k, p.i) == z.at(p.k, p.j);
}

/// All z in Z^N_0 with |z|_1 <= radius, in lexicographic order.
inline std::vector<ShiftVector> shift_ball(int n, int radius)
{
    if (radius < 0) {
        throw InputError("shift ball radius must be non-negative");
    }
    std::vector<Position> free;
    for (int k = 1; k < n; ++k) {
        for (int i = 1; i <= k; ++i) {
            free.push_back({k, i});
        }
    }
    std::vector<ShiftVector> out;
    ShiftVector z(n);
    auto rec = [&](auto &&self, std::size_t idx, long budget) -> void {
        if (idx == free.size()) {
            out.push_back(z);
            return;
        }
        for (long e = -budget; e <= budget; ++e) {
            z.set(free[idx].k, free[idx].i, e);
            self(self, idx + 1, budget - std::labs(e));
        }
        z.set(free[idx].k, free[idx].i, 0);
    };
    rec(rec, 0, radius);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gtmod

#endif
