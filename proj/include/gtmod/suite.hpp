#ifndef GTMOD_SUITE_HPP
#define GTMOD_SUITE_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "random.hpp"
#include "verify.hpp"

namespace gtmod
{

struct SuiteConfig {
    int n_min = 2;
    int n_max = 3;
    std::uint64_t seed = 1;
    int radius = 2;
    int trunc = Jet::default_order;
    Mutation mutation = Mutation::none;
    int generic_count = 20;
    int singular_count = 10;
    int expression_count = 20;
    std::set<std::string> suites = {"fd", "generic", "singular", "lemma"};
};

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {"fd", "generic", "singular", "lemma"};
    return names;
}

/// Weights used for the bracket and Casimir runs: 0, w1, w1+w2, 2w1, 2w1+w2.
inline std::vector<std::vector<long>> small_weights(int n)
{
    std::vector<std::vector<long>> out;
    for (const std::vector<long> &head : {std::vector<long>{}, {1}, {1, 1}, {2}, {2, 1}}) {
        std::vector<long> w(static_cast<std::size_t>(n), 0);
        std::copy(head.begin(), head.end(), w.begin());
        out.push_back(std::move(w));
    }
    return out;
}

/// Every dominant weight with entries in [lo, hi].
inline std::vector<std::vector<long>> dominant_weights(int n, long lo, long hi)
{
    std::vector<std::vector<long>> out;
    std::vector<long> w(static_cast<std::size_t>(n));
    auto rec = [&](auto &&self, int idx, long cap) -> void {
        if (idx == n) {
            out.push_back(w);
            return;
        }
        for (long x = cap; x >= lo; --x) {
            w[static_cast<std::size_t>(idx)] = x;
            self(self, idx + 1, x);
        }
    };
    rec(rec, 0, hi);
    return out;
}

/// Pairs (k,1,k) for 2 <= k < n.
inline std::vector<SingularPairSpec> sample_pairs(int n)
{
    std::vector<SingularPairSpec> out;
    for (int k = 2; k < n; ++k) {
        out.push_back({k, 1, k});
    }
    return out;
}

/// Sym/Alt tags over the canonical shifts of the ball (Alt omitted at tau-fixed shifts).
inline std::vector<BasisTag> singular_tags(int n, const SingularPairSpec &p, int radius)
{
    std::vector<BasisTag> out;
    for (const auto &z : shift_ball(n, radius)) {
        if (!is_canonical(z, p)) {
            continue;
        }
        out.push_back(BasisTag::sym(z));
        if (!is_tau_fixed(z, p)) {
            out.push_back(BasisTag::alt(z));
        }
    }
    return out;
}

/// Random rational function of the path variables, regular at the point.
/**
 * A sum of two or three terms r * f1 * f2 ..., each factor either
 * (l_a - l_b + c) or its reciprocal; reciprocals are only taken of factors that
 * do not vanish at e = 0. The pair positions are drawn more often so that D is
 * not trivially zero.
 */
inline PathExpression random_expression(const EvalContext &ctx, InstanceRng &rng)
{
    struct Factor {
        Position a;
        std::optional<Position> b;
        Rational c;
        bool inverse;
    };
    struct Term {
        Rational r;
        std::vector<Factor> factors;
    };
    const int n = ctx.base.n();
    const SingularPairSpec pair = *ctx.pair;
    const Tableau point = ctx.point();
    auto pick = [&]() -> Position {
        if (rng.uniform(0, 1) == 0) {
            return rng.uniform(0, 1) == 0 ? Position{pair.k, pair.i} : Position{pair.k, pair.j};
        }
        const int k = static_cast<int>(rng.uniform(1, n));
        return {k, static_cast<int>(rng.uniform(1, k))};
    };
    std::vector<Term> terms;
    const long count = rng.uniform(2, 3);
    for (long t = 0; t < count; ++t) {
        Term term{rng.rational(), {}};
        const long nf = rng.uniform(1, 3);
        for (long f = 0; f < nf; ++f) {
            Factor fac{pick(), std::nullopt, Rational(rng.uniform(-3, 3)), rng.uniform(0, 2) == 0};
            if (rng.uniform(0, 1) == 0) {
                fac.b = pick();
            }
            Rational at = point.at(fac.a) + fac.c;
            if (fac.b) {
                at -= point.at(*fac.b);
            }
            if (at.is_zero()) {
                fac.inverse = false;
            }
            term.factors.push_back(fac);
        }
        terms.push_back(std::move(term));
    }
    std::string name;
    for (const auto &term : terms) {
        name += (name.empty() ? "" : " + ") + term.r.str();
        for (const auto &f : term.factors) {
            std::string s = "l" + std::to_string(f.a.k) + std::to_string(f.a.i);
            if (f.b) {
                s += "-l" + std::to_string(f.b->k) + std::to_string(f.b->i);
            }
            s += (f.c.sign() < 0 ? "" : "+") + f.c.str();
            name += f.inverse ? "/(" + s + ")" : "*(" + s + ")";
        }
    }
    return {name, [terms](const BasicTableau<Jet> &p) {
                Jet total = Jet::zero(p.at(1, 1).trunc_order(), p.at(1, 1).floor());
                for (const auto &term : terms) {
                    Jet prod = one_like(p.at(1, 1)) * term.r;
                    for (const auto &f : term.factors) {
                        Jet x = p.at(f.a) + f.c;
                        if (f.b) {
                            x -= p.at(*f.b);
                        }
                        prod = f.inverse ? prod / x : prod * x;
                    }
                    total += prod;
                }
                return total;
            }};
}

/// Fixed expressions with known behaviour: x, a symmetric one, 1/(x - y + 1), p+/q*.
inline std::vector<PathExpression> fixed_expressions(const SingularPairSpec &p)
{
    const Position x{p.k, p.i};
    const Position y{p.k, p.j};
    return {
        {"x", [x](const BasicTableau<Jet> &l) { return l.at(x); }},
        {"x*y+x+y", [x, y](const BasicTableau<Jet> &l) { return l.at(x) * l.at(y) + l.at(x) + l.at(y); }},
        {"1/(x-y+1)", [x, y](const BasicTableau<Jet> &l) { return Rational(1) / (l.at(x) - l.at(y) + Rational(1)); }},
        {"p+/q*", [p](const BasicTableau<Jet> &l) {
             return p_value(l, Sign::plus, p.k, p.i) / qstar_value(l, p.k, p.i, p.j);
         }},
    };
}

namespace detail
{

inline Options options_of(const SuiteConfig &cfg)
{
    Options o;
    o.trunc = cfg.trunc;
    o.mutation = cfg.mutation;
    return o;
}

inline void casimir_all(const Representation &rep, const std::vector<BasisTag> &tags,
                        const std::function<void(CheckReport)> &emit, std::optional<std::uint64_t> seed)
{
    for (int m = 1; m <= rep.n(); ++m) {
        for (int t = 1; t <= m; ++t) {
            CheckReport r = check_casimir(rep, m, t, tags);
            r.seed = seed;
            emit(std::move(r));
        }
    }
}

} // namespace detail

inline void run_fd_suite(const SuiteConfig &cfg, int n, const std::function<void(CheckReport)> &emit)
{
    for (const auto &lambda : dominant_weights(n, 0, 3)) {
        emit(check_fd_dimension(lambda));
    }
    for (const auto &lambda : small_weights(n)) {
        const Representation rep(ModuleSpec::finite_dim(lambda), detail::options_of(cfg));
        std::vector<BasisTag> tags;
        for (auto &t : fd_basis(lambda)) {
            tags.push_back(BasisTag::standard(std::move(t)));
        }
        emit(check_bracket_suite(rep, tags));
        detail::casimir_all(rep, tags, emit, std::nullopt);
    }
}

inline void run_generic_suite(const SuiteConfig &cfg, int n, const std::function<void(CheckReport)> &emit)
{
    std::vector<BasisTag> tags;
    for (auto &z : shift_ball(n, cfg.radius)) {
        tags.push_back(BasisTag::gen(std::move(z)));
    }
    for (int idx = 0; idx < cfg.generic_count; ++idx) {
        const std::uint64_t seed = derive_seed(cfg.seed, "generic-" + std::to_string(n), static_cast<std::uint64_t>(idx));
        InstanceRng rng(seed);
        const Representation rep(ModuleSpec::generic(random_generic_tableau(n, rng)), detail::options_of(cfg));
        CheckReport b = check_bracket_suite(rep, tags);
        b.seed = seed;
        emit(std::move(b));
        detail::casimir_all(rep, tags, emit, seed);
    }
}

inline void run_singular_suite(const SuiteConfig &cfg, int n, const std::function<void(CheckReport)> &emit)
{
    for (const auto &pair : sample_pairs(n)) {
        const auto tags = singular_tags(n, pair, cfg.radius);
        const std::string label = "singular-" + std::to_string(n) + "-" + std::to_string(pair.k);
        for (int idx = 0; idx < cfg.singular_count; ++idx) {
            const std::uint64_t seed = derive_seed(cfg.seed, label, static_cast<std::uint64_t>(idx));
            InstanceRng rng(seed);
            const Representation rep(ModuleSpec::one_singular(random_one_critical_tableau(n, pair, rng), pair),
                                     detail::options_of(cfg));
            CheckReport reg = check_regularity(rep, tags);
            reg.seed = seed;
            emit(std::move(reg));

            // Negative control: the plain T(z) coefficients 1/q and p+/q do have poles.
            CheckReport control{"pole_control", detail::instance_of(rep, 1)};
            control.seed = seed;
            const EvalContext ctx(rep.spec().point(), ShiftVector(n), pair, cfg.trunc);
            const Jet inv_q = one_like(ctx.path_point().at(1, 1)) / eval_q(ctx, pair.k, pair.i);
            control.record(!inv_q.is_regular(), [&] { return nlohmann::json{{"jet", json::to_json(inv_q)}}; });
            if (!eval_p(ctx, Sign::plus, pair.k, pair.i).coeff(0).is_zero()) {
                const Jet raw = raw_raising_coefficient(ctx, pair.k, pair.i);
                control.record(!raw.is_regular(), [&] { return nlohmann::json{{"jet", json::to_json(raw)}}; });
            }
            emit(std::move(control));

            CheckReport b = check_bracket_suite(rep, tags);
            b.seed = seed;
            emit(std::move(b));
            detail::casimir_all(rep, tags, emit, seed);
        }
    }
}

inline void run_lemma_suite(const SuiteConfig &cfg, int n, const std::function<void(CheckReport)> &emit)
{
    std::vector<std::pair<EvalContext, PathExpression>> samples;
    std::vector<EvalContext> contexts;
    const auto pairs = sample_pairs(n);
    if (pairs.empty()) {
        return;
    }
    const auto ball = shift_ball(n, cfg.radius);
    const std::uint64_t seed = derive_seed(cfg.seed, "lemma-" + std::to_string(n), 0);
    InstanceRng rng(seed);
    for (const auto &pair : pairs) {
        const Tableau v = random_one_critical_tableau(n, pair, rng);
        for (const auto &z : {ShiftVector(n), ball[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ball.size()) - 1))]}) {
            const EvalContext ctx(v, z, pair, cfg.trunc);
            contexts.push_back(ctx);
            for (auto &e : fixed_expressions(pair)) {
                samples.emplace_back(ctx, std::move(e));
            }
        }
    }
    for (int idx = 0; idx < cfg.expression_count; ++idx) {
        const SingularPairSpec &pair = pairs[static_cast<std::size_t>(idx) % pairs.size()];
        const Tableau v = random_one_critical_tableau(n, pair, rng);
        const ShiftVector &z = ball[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ball.size()) - 1))];
        const EvalContext ctx(v, z, pair, cfg.trunc);
        contexts.push_back(ctx);
        samples.emplace_back(ctx, random_expression(ctx, rng));
    }
    for (CheckReport r : {check_dlemma(samples), check_tau_transport(samples), check_tau_equivariance(contexts)}) {
        r.instance["n"] = n;
        r.seed = seed;
        emit(std::move(r));
    }
}

/// Run the selected suites for n_min..n_max; returns true iff every report passes.
inline bool run_suites(const SuiteConfig &cfg, const std::function<void(const CheckReport &)> &sink)
{
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) {
        throw InputError("n range must satisfy 2 <= n_min <= n_max");
    }
    if (cfg.radius < 0) {
        throw InputError("radius must be non-negative");
    }
    if (cfg.trunc < 1) {
        throw InputError("truncation order must be at least 1");
    }
    for (const auto &s : cfg.suites) {
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
            throw InputError("unknown suite \"" + s + "\"");
        }
    }
    bool ok = true;
    const std::function<void(CheckReport)> emit = [&](CheckReport r) {
        ok = ok && r.pass;
        sink(r);
    };
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        if (cfg.suites.count("fd")) {
            run_fd_suite(cfg, n, emit);
        }
        if (cfg.suites.count("generic")) {
            run_generic_suite(cfg, n, emit);
        }
        if (cfg.suites.count("singular")) {
            run_singular_suite(cfg, n, emit);
        }
        if (cfg.suites.count("lemma")) {
            run_lemma_suite(cfg, n, emit);
        }
    }
    return ok;
}

} // namespace gtmod

#endif
