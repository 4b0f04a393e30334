#ifndef GTMOD_TESTS_SUPPORT_HPP
#define GTMOD_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include <gtmod/random.hpp>
#include <gtmod/rational.hpp>
#include <gtmod/tableau.hpp>

namespace testing_support
{

using gtmod::Rational;

inline Rational q(const char *s)
{
    return Rational::parse(s);
}

/// Tableau from rows written top row first, entries as literals.
inline gtmod::Tableau tab(const std::vector<std::vector<std::string>> &rows)
{
    std::vector<std::vector<Rational>> r;
    for (const auto &row : rows) {
        std::vector<Rational> out;
        for (const auto &e : row) {
            out.push_back(Rational::parse(e));
        }
        r.push_back(std::move(out));
    }
    return gtmod::Tableau::from_rows(r);
}

/// Shift with rows n-1 .. 1.
inline gtmod::ShiftVector shift(int n, const std::vector<std::vector<long>> &rows)
{
    return gtmod::ShiftVector::from_rows(n, rows);
}

// The running 1-critical example of gl(3).
inline gtmod::Tableau critical3()
{
    return tab({{"2", "0", "-2"}, {"1", "1"}, {"1"}});
}

} // namespace testing_support

#endif
