#ifndef GTMOD_FORMULAS_HPP
#define GTMOD_FORMULAS_HPP

#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "jet.hpp"
#include "rational.hpp"
#include "tableau.hpp"

namespace gtmod
{

/// Deliberate formula defects used to check that the verification harness bites.
enum class Mutation {
    none,
    sign_e12,             // E_{t,t+1} coefficients with the wrong sign
    drop_gamma_shift,     // gamma_{m,t} evaluated without the +m-1 shift
    missing_pminus_factor, // p^-_{k,i} missing its last factor
    swap_tau,             // Alt(tau z) treated as +Alt(z) when re-expanding
};

enum class Sign { plus, minus };

inline Rational one_like(const Rational &)
{
    return Rational(1);
}
inline Jet one_like(const Jet &ref)
{
    return Jet::constant(Rational(1), ref.trunc_order() - std::min(ref.min_exp(), 0), ref.floor());
}

/// p^{+-}_{k,i}(P) = prod_{j=1}^{k+-1} (P_{k,i} - P_{k+-1,j}); the empty product is 1.
template <class Field>
Field p_value(const BasicTableau<Field> &pt, Sign sign, int k, int i, Mutation mut = Mutation::none)
{
    const int n = pt.n();
    if (!valid_position(n, k, i) || (sign == Sign::plus && k >= n)) {
        throw InputError("p" + std::string(sign == Sign::plus ? "+" : "-") + " needs a valid (k,i)"
                         + (sign == Sign::plus ? " with k < n" : ""));
    }
    const int other = sign == Sign::plus ? k + 1 : k - 1;
    int count = other;
    if (sign == Sign::minus && mut == Mutation::missing_pminus_factor && count > 0) {
        --count;
    }
    const Field &x = pt.at(k, i);
    Field acc = one_like(x);
    for (int j = 1; j <= count; ++j) {
        acc = acc * (x - pt.at(other, j));
    }
    return acc;
}

/// q_{k,i}(P) = prod_{j != i} (P_{k,i} - P_{k,j}).
template <class Field>
Field q_value(const BasicTableau<Field> &pt, int k, int i)
{
    if (!valid_position(pt.n(), k, i)) {
        throw InputError("q needs a valid position");
    }
    const Field &x = pt.at(k, i);
    Field acc = one_like(x);
    for (int j = 1; j <= k; ++j) {
        if (j != i) {
            acc = acc * (x - pt.at(k, j));
        }
    }
    return acc;
}

/// q_{k,r} with the oriented factor (P_{k,r} - P_{k,other}) removed.
template <class Field>
Field qstar_value(const BasicTableau<Field> &pt, int k, int r, int other)
{
    if (!valid_position(pt.n(), k, r) || !valid_position(pt.n(), k, other) || r == other) {
        throw InputError("q* needs two distinct positions of row k");
    }
    const Field &x = pt.at(k, r);
    Field acc = one_like(x);
    for (int j = 1; j <= k; ++j) {
        if (j != r && j != other) {
            acc = acc * (x - pt.at(k, j));
        }
    }
    return acc;
}

/// |P|_k; |P|_0 = 0.
template <class Field>
Field rowsum_value(const BasicTableau<Field> &pt, int k)
{
    if (k < 0 || k > pt.n()) {
        throw InputError("row sum index out of range");
    }
    Field acc = one_like(pt.at(1, 1)) * Rational(0);
    for (int i = 1; i <= k; ++i) {
        acc = acc + pt.at(k, i);
    }
    return acc;
}

/// E_{t,t} eigenvalue |P|_t - |P|_{t-1} + t - 1.
template <class Field>
Field weight_value(const BasicTableau<Field> &pt, int t)
{
    if (t < 1 || t > pt.n()) {
        throw InputError("weight index out of range");
    }
    return rowsum_value(pt, t) - rowsum_value(pt, t - 1) + Rational(t - 1);
}

/// gamma_{m,t}(P) = sum_i (P_{m,i} + m - 1)^t prod_{j != i} (1 - 1/(P_{m,i} - P_{m,j})).
template <class Field>
Field gamma_value(const BasicTableau<Field> &pt, int m, int t, Mutation mut = Mutation::none)
{
    if (!(1 <= t && t <= m && m <= pt.n())) {
        throw InputError("gamma_{m,t} needs 1 <= t <= m <= n");
    }
    const Rational shift = mut == Mutation::drop_gamma_shift ? Rational(0) : Rational(m - 1);
    Field total = one_like(pt.at(m, 1)) * Rational(0);
    for (int i = 1; i <= m; ++i) {
        const Field &x = pt.at(m, i);
        const Field base = x + shift;
        Field term = one_like(x);
        for (int e = 0; e < t; ++e) {
            term = term * base;
        }
        for (int j = 1; j <= m; ++j) {
            if (j == i) {
                continue;
            }
            const Field diff = x - pt.at(m, j);
            if (is_zero(diff)) {
                throw PoleWithoutPath("gamma_{" + std::to_string(m) + "," + std::to_string(t)
                                      + "} at a critical row needs the critical path");
            }
            term = term * (Rational(1) - Rational(1) / diff);
        }
        total = total + term;
    }
    return total;
}

/// Evaluation point lambda^z, optionally moving along the critical path of a pair.
/**
 * With a pair (k,i,j) attached, the entry (k,i) becomes v_{k,i} + z_{k,i} + e/2
 * and (k,j) becomes v_{k,j} + z_{k,j} - e/2, so x - y = e along the path and
 * the e^1 coefficient of any regular f along it is D(f) = (d/dx - d/dy)/2.
 */
struct EvalContext {
    Tableau base;
    ShiftVector shift;
    std::optional<SingularPairSpec> pair;
    int trunc = Jet::default_order;
    int floor = Jet::default_floor;

    EvalContext(Tableau v, ShiftVector z, std::optional<SingularPairSpec> p = std::nullopt,
                int trunc_order = Jet::default_order, int floor_exp = Jet::default_floor)
        : base(std::move(v)), shift(std::move(z)), pair(p), trunc(trunc_order), floor(floor_exp)
    {
        if (base.n() != shift.n()) {
            throw InputError("evaluation point and shift sizes differ");
        }
        if (trunc < 1) {
            throw InputError("truncation order must be at least 1");
        }
        if (pair) {
            pair->validate(base.n());
            if (base.at(pair->k, pair->i) != base.at(pair->k, pair->j)) {
                throw InputError("the critical path needs v_{k,i} = v_{k,j}");
            }
        }
    }

    /// Order carried by path variables: the requested order plus room for the deepest allowed pole.
    int working_order() const
    {
        return trunc - floor;
    }

    Tableau point() const
    {
        return apply_shift(base, shift);
    }

    BasicTableau<Jet> path_point() const
    {
        return path_point_for(shift);
    }

    /// Path point with the shift z replaced by another one (same base and pair).
    BasicTableau<Jet> path_point_for(const ShiftVector &z) const
    {
        const Tableau p = apply_shift(base, z);
        const int order = working_order();
        BasicTableau<Jet> out(p.n(), Jet::zero(order, floor));
        for (int k = 1; k <= p.n(); ++k) {
            for (int i = 1; i <= k; ++i) {
                out.set(k, i, Jet::constant(p.at(k, i), order, floor));
            }
        }
        if (pair) {
            const Jet half = Jet::monomial(Rational(1, 2), 1, order, floor);
            out.set(pair->k, pair->i, out.at(pair->k, pair->i) + half);
            out.set(pair->k, pair->j, out.at(pair->k, pair->j) - half);
        }
        return out;
    }

    /// x - y along the path: lambda_{k,i} - lambda_{k,j} of the unshifted variables.
    Jet pair_difference() const
    {
        if (!pair) {
            throw InputError("no singular pair attached");
        }
        const auto p = path_point_for(ShiftVector(base.n()));
        return p.at(pair->k, pair->i) - p.at(pair->k, pair->j);
    }
};

inline Jet eval_p(const EvalContext &ctx, Sign sign, int k, int i, Mutation mut = Mutation::none)
{
    return p_value(ctx.path_point(), sign, k, i, mut);
}

inline Jet eval_q(const EvalContext &ctx, int k, int i)
{
    Jet q = q_value(ctx.path_point(), k, i);
    if (q.is_zero()) {
        throw PoleWithoutPath("q_{" + std::to_string(k) + "," + std::to_string(i)
                              + "} vanishes at a critical row with no path attached");
    }
    return q;
}

/// q*_{k,r}, r one of the pair columns; the removed factor is oriented from r to its partner.
inline Jet eval_qstar(const EvalContext &ctx, int k, int r)
{
    if (!ctx.pair || ctx.pair->k != k || (r != ctx.pair->i && r != ctx.pair->j)) {
        throw InputError("q* is only defined on the singular pair of the context");
    }
    const int other = r == ctx.pair->i ? ctx.pair->j : ctx.pair->i;
    return qstar_value(ctx.path_point(), k, r, other);
}

inline Jet eval_rowsum(const EvalContext &ctx, int k)
{
    return rowsum_value(ctx.path_point(), k);
}

inline Jet eval_gamma(const EvalContext &ctx, int m, int t, Mutation mut = Mutation::none)
{
    return gamma_value(ctx.path_point(), m, t, mut);
}

/// Evaluate an arbitrary expression of the path point and require it to be regular.
template <class Expr>
Jet eval_regular(const EvalContext &ctx, Expr &&expr)
{
    Jet j = std::forward<Expr>(expr)(ctx.path_point());
    if (!j.is_regular()) {
        throw IrregularCoefficient("expression has a pole at the critical point: " + j.str());
    }
    return j;
}

/// f(v + z) for a regular expression.
template <class Expr>
Rational value_of(const EvalContext &ctx, Expr &&expr)
{
    return eval_regular(ctx, std::forward<Expr>(expr)).coeff(0);
}

/// D(f)(v + z): the e^1 coefficient along the path.
template <class Expr>
Rational d_of(const EvalContext &ctx, Expr &&expr)
{
    if (!ctx.pair) {
        throw InputError("D needs a singular pair");
    }
    return eval_regular(ctx, std::forward<Expr>(expr)).coeff(1);
}

} // namespace gtmod

#endif
