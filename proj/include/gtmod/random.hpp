#ifndef GTMOD_RANDOM_HPP
#define GTMOD_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"
#include "tableau.hpp"

namespace gtmod
{

/// Seeded generator for test instances; mt19937_64 output is fixed by the standard.
class InstanceRng
{
public:
    explicit InstanceRng(std::uint64_t seed) : m_engine(seed) {}

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here, reproducibility is not.
    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(m_engine() % span);
    }

    /// p/q with |p| <= 20 and 1 <= q <= 7.
    Rational rational()
    {
        return Rational(uniform(-20, 20), uniform(1, 7));
    }

private:
    std::mt19937_64 m_engine;
};

/// SplitMix64 finalizer; mixes a base seed with an instance label and index.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view label, std::uint64_t index)
{
    std::uint64_t h = base ^ 0x9e3779b97f4a7c15ULL;
    for (char c : label) {
        h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    }
    h += index * 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    return h ^ (h >> 31);
}

namespace detail
{

inline Tableau random_tableau(int n, InstanceRng &rng)
{
    Tableau v(n, Rational(0));
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= k; ++i) {
            v.set(k, i, rng.rational());
        }
    }
    return v;
}

inline bool distinct_top_row(const Tableau &v)
{
    const int n = v.n();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (v.at(n, i) == v.at(n, j)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

/// Generic tableau by rejection; the top row is kept free of repeated entries.
inline Tableau random_generic_tableau(int n, InstanceRng &rng)
{
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Tableau v = detail::random_tableau(n, rng);
        if (detail::distinct_top_row(v) && classify(v).generic) {
            return v;
        }
    }
    throw InputError("could not sample a generic tableau");
}

/// 1-critical tableau whose only singular pair is the given one.
inline Tableau random_one_critical_tableau(int n, const SingularPairSpec &pair, InstanceRng &rng)
{
    pair.validate(n);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Tableau v = detail::random_tableau(n, rng);
        v.set(pair.k, pair.j, v.at(pair.k, pair.i));
        if (!detail::distinct_top_row(v)) {
            continue;
        }
        const Classification c = classify(v);
        if (c.is_1_singular && c.is_1_critical && c.critical_pairs.front() == pair) {
            return v;
        }
    }
    throw InputError("could not sample a 1-critical tableau");
}

} // namespace gtmod

#endif
