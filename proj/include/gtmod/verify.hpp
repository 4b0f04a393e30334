#ifndef GTMOD_VERIFY_HPP
#define GTMOD_VERIFY_HPP

#include <array>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "formulas.hpp"
#include "json_io.hpp"
#include "representation.hpp"
#include "tableau.hpp"

namespace gtmod
{

/// Outcome of one check over one instance. Equality is exact; there are no tolerances.
struct CheckReport {
    CheckReport(std::string name, nlohmann::json inst = nlohmann::json::object())
        : check(std::move(name)), instance(std::move(inst))
    {
    }

    std::string check;
    nlohmann::json instance = nlohmann::json::object();
    bool pass = true;
    long identities = 0;
    long failures = 0;
    std::optional<std::uint64_t> seed;
    nlohmann::json failure; // first offending identity, both sides serialized

    /// Record one identity; describe() is only called for the first failure.
    template <class Describe>
    void record(bool ok, Describe &&describe)
    {
        ++identities;
        if (!ok) {
            ++failures;
            if (pass) {
                failure = std::forward<Describe>(describe)();
            }
            pass = false;
        }
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j = {{"check", check}, {"instance", instance}, {"pass", pass},
                            {"identities", identities}, {"failures", failures}};
        if (seed) {
            j["instance_seed"] = *seed;
        }
        if (!pass) {
            j["failure"] = failure;
        }
        return j;
    }
};

namespace detail
{

inline nlohmann::json terms_json(const ModuleVector &v)
{
    return json::to_json(v)["terms"];
}

inline nlohmann::json instance_of(const Representation &rep, std::size_t tags)
{
    return {{"spec", json::to_json(rep.spec())}, {"tags", tags}};
}

// Evaluate one identity, turning exceptions into failures with the message recorded.
template <class Lhs, class Rhs, class Describe>
void record_identity(CheckReport &report, Lhs &&lhs, Rhs &&rhs, Describe &&describe)
{
    try {
        const ModuleVector l = lhs();
        const ModuleVector r = rhs();
        report.record(l == r, [&] {
            nlohmann::json d = describe();
            d["lhs"] = terms_json(l);
            d["rhs"] = terms_json(r);
            return d;
        });
    } catch (const std::exception &e) {
        report.record(false, [&] {
            nlohmann::json d = describe();
            d["error"] = e.what();
            return d;
        });
    }
}

} // namespace detail

/// [E(a,b), E(c,d)] = delta_{b,c} E(a,d) - delta_{d,a} E(c,b) on every tag.
/**
 * quads defaults to all (a,b,c,d) in [n]^4.
 */
inline CheckReport check_bracket_suite(const Representation &rep, const std::vector<BasisTag> &tags,
                                       std::optional<std::vector<std::array<int, 4>>> quads = std::nullopt)
{
    const int n = rep.n();
    if (!quads) {
        quads.emplace();
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                for (int c = 1; c <= n; ++c) {
                    for (int d = 1; d <= n; ++d) {
                        quads->push_back({a, b, c, d});
                    }
                }
            }
        }
    }
    CheckReport report{"bracket", detail::instance_of(rep, tags.size())};
    for (const auto &tag : tags) {
        const ModuleVector v = rep.vector(tag);
        for (const auto &[a, b, c, d] : *quads) {
            detail::record_identity(
                report,
                [&] {
                    return rep.act(rep.act(v, c, d), a, b) - rep.act(rep.act(v, a, b), c, d);
                },
                [&] {
                    ModuleVector r = rep.zero();
                    if (b == c) {
                        r += rep.act(v, a, d);
                    }
                    if (d == a) {
                        r -= rep.act(v, c, b);
                    }
                    return r;
                },
                [&] {
                    return nlohmann::json{{"tag", json::to_json(tag)}, {"indices", {a, b, c, d}}};
                });
        }
    }
    return report;
}

/// gamma_{m,t} at the point carried by a tag, and D(gamma) for 1-singular tags.
struct GammaReadout {
    Rational value;
    Rational derivative;
};

inline GammaReadout gamma_at(const Representation &rep, const BasisTag &tag, int m, int t)
{
    const ModuleSpec &spec = rep.spec();
    const Mutation mut = rep.options().mutation;
    switch (spec.family()) {
    case Family::finite_dim:
        return {gamma_value(tag.tableau, m, t, mut), Rational(0)};
    case Family::generic:
        return {gamma_value(apply_shift(spec.point(), tag.shift), m, t, mut), Rational(0)};
    case Family::one_singular: {
        const EvalContext ctx(spec.point(), tag.shift, spec.pair(), rep.options().trunc, rep.options().floor);
        const Jet g = eval_regular(ctx, [&](const BasicTableau<Jet> &p) { return gamma_value(p, m, t, mut); });
        return {g.coeff(0), g.coeff(1)};
    }
    }
    return {};
}

/// c_{m,t} against gamma_{m,t}.
/**
 * Finite-dimensional and generic tags are eigenvectors. On a 1-singular module
 * c_{m,t} is diagonal for m != k; for m = k it acts on span{S(z), A(z)} by
 * c S = gamma S, c A = gamma A + D(gamma) S, so (c - gamma)^2 kills the span.
 */
inline CheckReport check_casimir(const Representation &rep, int m, int t, const std::vector<BasisTag> &tags)
{
    CheckReport report{"casimir", detail::instance_of(rep, tags.size())};
    report.instance["m"] = m;
    report.instance["t"] = t;
    const ModuleSpec &spec = rep.spec();
    const bool block = spec.family() == Family::one_singular && spec.pair().k == m;
    for (const auto &tag : tags) {
        const ModuleVector v = rep.vector(tag);
        auto describe = [&](const char *what) {
            return [&tag, what] { return nlohmann::json{{"tag", json::to_json(tag)}, {"identity", what}}; };
        };
        GammaReadout g;
        try {
            g = gamma_at(rep, tag, m, t);
        } catch (const std::exception &e) {
            report.record(false, [&] {
                return nlohmann::json{{"tag", json::to_json(tag)}, {"error", e.what()}};
            });
            continue;
        }
        const auto cv = [&] { return rep.act_casimir(v, m, t); };
        if (block && tag.kind == TagKind::antisymmetric) {
            detail::record_identity(
                report, cv,
                [&] {
                    ModuleVector r = g.value * v;
                    r.add(BasisTag::sym(tag.shift), g.derivative);
                    return r;
                },
                describe("c A = gamma A + D(gamma) S"));
        } else {
            detail::record_identity(report, cv, [&] { return g.value * v; }, describe("c T = gamma T"));
        }
        if (block) {
            detail::record_identity(
                report,
                [&] {
                    const ModuleVector once = rep.act_casimir(v, m, t) - g.value * v;
                    return rep.act_casimir(once, m, t) - g.value * once;
                },
                [&] { return rep.zero(); }, describe("(c - gamma)^2 = 0"));
        }
    }
    return report;
}

/// Every Chevalley coefficient on every tag of a 1-singular module is a regular jet.
inline CheckReport check_regularity(const Representation &rep, const std::vector<BasisTag> &tags)
{
    if (rep.spec().family() != Family::one_singular) {
        throw InputError("regularity is checked on 1-singular modules");
    }
    CheckReport report{"regularity", detail::instance_of(rep, tags.size())};
    const int n = rep.n();
    std::vector<std::pair<int, int>> gens;
    for (int t = 1; t <= n; ++t) {
        gens.emplace_back(t, t);
        if (t < n) {
            gens.emplace_back(t, t + 1);
            gens.emplace_back(t + 1, t);
        }
    }
    for (const auto &tag : tags) {
        for (const auto &[a, b] : gens) {
            try {
                for (const auto &[target, jet] : rep.chevalley_jets(tag, a, b)) {
                    report.record(jet.is_regular(), [&] {
                        return nlohmann::json{{"tag", json::to_json(tag)},
                                              {"generator", {a, b}},
                                              {"target", json::to_json(target)},
                                              {"jet", json::to_json(jet)}};
                    });
                }
            } catch (const std::exception &e) {
                report.record(false, [&] {
                    return nlohmann::json{{"tag", json::to_json(tag)}, {"generator", {a, b}}, {"error", e.what()}};
                });
            }
        }
    }
    return report;
}

/// Coefficient -p+_{t,s}/q_{t,s} of the plain T(z) basis, as a jet along the critical path.
inline Jet raw_raising_coefficient(const EvalContext &ctx, int t, int s)
{
    const auto p = ctx.path_point();
    return -(p_value(p, Sign::plus, t, s) / q_value(p, t, s));
}

/// A named expression f(lambda) of the path point.
struct PathExpression {
    std::string name;
    std::function<Jet(const BasicTableau<Jet> &)> f;
};

/// tau applied to the unshifted path point, then shifted by z: the point where tau.(f(lambda^z)) is read.
inline BasicTableau<Jet> tau_transported_point(const EvalContext &ctx, const ShiftVector &z)
{
    BasicTableau<Jet> p = tau_apply(ctx.path_point_for(ShiftVector(ctx.base.n())), *ctx.pair);
    for (int k = 1; k < p.n(); ++k) {
        for (int i = 1; i <= k; ++i) {
            if (z.at(k, i) != 0) {
                p.set(k, i, p.at(k, i) + Rational(z.at(k, i)));
            }
        }
    }
    return p;
}

/// (f - tau f)/(x - y) = 2 D(f) at the critical point; the left side is even in e.
inline CheckReport check_dlemma(const std::vector<std::pair<EvalContext, PathExpression>> &samples)
{
    CheckReport report{"dlemma", {{"samples", samples.size()}}};
    for (const auto &[ctx, expr] : samples) {
        auto describe = [&, name = expr.name](nlohmann::json extra) {
            extra["expression"] = name;
            extra["point"] = json::to_json(ctx.point());
            return extra;
        };
        try {
            const Jet f = expr.f(ctx.path_point());
            const Jet tf = expr.f(tau_transported_point(ctx, ctx.shift));
            const Jet lhs = (f - tf) / ctx.pair_difference();
            const Jet rhs = Jet::constant(Rational(2) * f.coeff(1), lhs.trunc_order(), lhs.floor());
            const bool ok = f.is_regular() && lhs.is_regular() && lhs.agrees_with(rhs, 0, 1);
            report.record(ok, [&] {
                return describe({{"lhs", json::to_json(lhs)}, {"rhs", json::to_json(rhs)}});
            });
        } catch (const std::exception &e) {
            report.record(false, [&] { return describe({{"error", e.what()}}); });
        }
    }
    return report;
}

/// tau.(f(lambda^z)) = (tau.f)(lambda^{tau z}), compared as jets.
inline CheckReport check_tau_transport(const std::vector<std::pair<EvalContext, PathExpression>> &samples)
{
    CheckReport report{"tau_transport", {{"samples", samples.size()}}};
    for (const auto &[ctx, expr] : samples) {
        try {
            const Jet lhs = expr.f(tau_transported_point(ctx, ctx.shift));
            // (tau.f)(lambda^{tau z}) = f(tau(lambda + tau z))
            const ShiftVector tz = tau_apply(ctx.shift, *ctx.pair);
            const Jet rhs = expr.f(tau_apply(ctx.path_point_for(tz), *ctx.pair));
            report.record(lhs == rhs, [&] {
                return nlohmann::json{{"expression", expr.name},
                                      {"lhs", json::to_json(lhs)},
                                      {"rhs", json::to_json(rhs)}};
            });
        } catch (const std::exception &e) {
            report.record(false, [&] { return nlohmann::json{{"expression", expr.name}, {"error", e.what()}}; });
        }
    }
    return report;
}

/// tau.p+-_{t,s} = p+-_{tau(t,s)} and tau.q_{t,s} = q_{tau(t,s)} at the path point of each context.
inline CheckReport check_tau_equivariance(const std::vector<EvalContext> &contexts)
{
    CheckReport report{"tau_equivariance", {{"contexts", contexts.size()}}};
    for (const auto &ctx : contexts) {
        const SingularPairSpec &pair = *ctx.pair;
        const BasicTableau<Jet> p = ctx.path_point();
        const BasicTableau<Jet> tp = tau_apply(p, pair);
        const int n = p.n();
        auto tau_col = [&](int t, int s) {
            if (t != pair.k) {
                return s;
            }
            return s == pair.i ? pair.j : (s == pair.j ? pair.i : s);
        };
        for (int t = 1; t < n; ++t) {
            for (int s = 1; s <= t; ++s) {
                const int ts = tau_col(t, s);
                auto describe = [&](const char *what, const Jet &l, const Jet &r) {
                    return [&, what] {
                        return nlohmann::json{{"function", what}, {"position", {t, s}},
                                              {"point", json::to_json(ctx.point())},
                                              {"lhs", json::to_json(l)}, {"rhs", json::to_json(r)}};
                    };
                };
                const Jet pp_l = p_value(tp, Sign::plus, t, s);
                const Jet pp_r = p_value(p, Sign::plus, t, ts);
                report.record(pp_l == pp_r, describe("p+", pp_l, pp_r));
                const Jet pm_l = p_value(tp, Sign::minus, t, s);
                const Jet pm_r = p_value(p, Sign::minus, t, ts);
                report.record(pm_l == pm_r, describe("p-", pm_l, pm_r));
                const Jet q_l = q_value(tp, t, s);
                const Jet q_r = q_value(p, t, ts);
                report.record(q_l == q_r, describe("q", q_l, q_r));
            }
        }
    }
    return report;
}

/// |fd_basis(lambda)| = weyl_dim(lambda).
inline CheckReport check_fd_dimension(const std::vector<long> &lambda)
{
    CheckReport report{"fd_dimension", {{"lambda", lambda}}};
    const auto basis = fd_basis(lambda);
    const long weyl = weyl_dim(lambda);
    report.instance["basis_size"] = basis.size();
    report.instance["weyl_dim"] = weyl;
    report.record(static_cast<long>(basis.size()) == weyl, [&] {
        return nlohmann::json{{"lhs", basis.size()}, {"rhs", weyl}};
    });
    return report;
}

} // namespace gtmod

#endif
