#include <gtest/gtest.h>

#include <gtmod/formulas.hpp>
#include <gtmod/random.hpp>

#include "support.hpp"

using namespace gtmod;
using testing_support::critical3;
using testing_support::q;
using testing_support::shift;
using testing_support::tab;

namespace
{

const SingularPairSpec pair212{2, 1, 2};

EvalContext crit_ctx(const ShiftVector &z = ShiftVector(3))
{
    return EvalContext(critical3(), z, pair212);
}

} // namespace

TEST(Formulas, PlusProductGl2)
{
    const EvalContext ctx(tab({{"1", "-1"}, {"0"}}), ShiftVector(2));
    EXPECT_EQ(eval_p(ctx, Sign::plus, 1, 1).coeff(0), Rational(-1));
    EXPECT_EQ(eval_p(ctx, Sign::minus, 1, 1).coeff(0), Rational(1));
    EXPECT_THROW(eval_p(ctx, Sign::plus, 2, 1), InputError);
}

TEST(Formulas, PlusProductAlongPath)
{
    // (1 - 1 - e/2)(1 - 1 + e/2) = -e^2/4
    const Jet p = eval_p(crit_ctx(), Sign::plus, 1, 1);
    EXPECT_EQ(p.min_exp(), 2);
    EXPECT_EQ(p.coeff(2), q("-1/4"));
}

TEST(Formulas, QAndQStar)
{
    const EvalContext gl2(tab({{"1", "-1"}, {"0"}}), ShiftVector(2));
    EXPECT_EQ(eval_q(gl2, 1, 1).coeff(0), Rational(1));
    const EvalContext ctx = crit_ctx();
    const Jet q21 = eval_q(ctx, 2, 1);
    EXPECT_EQ(q21.min_exp(), 1);
    EXPECT_EQ(q21.coeff(1), Rational(1));
    EXPECT_EQ(eval_qstar(ctx, 2, 1).coeff(0), Rational(1));
    // q_{2,2} = y - x = -e, and the oriented q*_{2,2} is still 1
    EXPECT_EQ(eval_q(ctx, 2, 2).coeff(1), Rational(-1));
    EXPECT_EQ(eval_qstar(ctx, 2, 2).coeff(0), Rational(1));
    EXPECT_THROW(eval_qstar(ctx, 1, 1), InputError);
}

TEST(Formulas, QStarTimesOrientedFactor)
{
    InstanceRng rng(31);
    for (int t = 0; t < 10; ++t) {
        const SingularPairSpec p{3, 1, 3};
        const EvalContext ctx(random_one_critical_tableau(4, p, rng), ShiftVector(4), p);
        const auto pt = ctx.path_point();
        EXPECT_EQ(eval_qstar(ctx, 3, 1) * (pt.at(3, 1) - pt.at(3, 3)), eval_q(ctx, 3, 1));
        EXPECT_EQ(eval_qstar(ctx, 3, 3) * (pt.at(3, 3) - pt.at(3, 1)), eval_q(ctx, 3, 3));
    }
}

TEST(Formulas, QWithoutPathAtCriticalRow)
{
    const EvalContext ctx(critical3(), ShiftVector(3));
    EXPECT_THROW(eval_q(ctx, 2, 1), PoleWithoutPath);
    EXPECT_THROW(eval_gamma(ctx, 2, 1), PoleWithoutPath);
}

TEST(Formulas, RowSums)
{
    const EvalContext ctx = crit_ctx();
    EXPECT_TRUE(eval_rowsum(ctx, 0).is_zero());
    const Jet r2 = eval_rowsum(ctx, 2);
    EXPECT_EQ(r2.coeff(0), Rational(2));
    EXPECT_EQ(r2.coeff(1), Rational(0));
    const EvalContext gl2(tab({{"1", "-1"}, {"0"}}), ShiftVector::delta(2, 1, 1));
    EXPECT_EQ(eval_rowsum(gl2, 1).coeff(0), Rational(1));
}

TEST(Formulas, GammaSmallCases)
{
    const Tableau v = tab({{"3", "1"}, {"5/2"}});
    EXPECT_EQ(gamma_value(v, 1, 1), q("5/2"));
    EXPECT_EQ(gamma_value(v, 2, 1), Rational(5));
    EXPECT_THROW(gamma_value(v, 1, 2), InputError);
}

TEST(Formulas, GammaTwoOnePolynomial)
{
    // gamma_{2,1}(a,b) = (a+1)(1 - 1/(a-b)) + (b+1)(1 - 1/(b-a)) = a + b + 1
    InstanceRng rng(41);
    int checked = 0;
    while (checked < 50) {
        const Rational a = rng.rational(), b = rng.rational();
        if (a == b) {
            continue;
        }
        Tableau v(2, Rational(0));
        v.set(2, 1, a);
        v.set(2, 2, b);
        EXPECT_EQ(gamma_value(v, 2, 1), a + b + Rational(1));
        ++checked;
    }
}

TEST(Formulas, GammaTwoTwoPolynomial)
{
    // gamma_{2,2} = (a+1)^2 + (b+1)^2 - (a+b+2), expanded by hand
    InstanceRng rng(43);
    for (int t = 0; t < 50; ++t) {
        const Rational a = rng.rational(), b = rng.rational();
        if (a == b) {
            continue;
        }
        Tableau v(2, Rational(0));
        v.set(2, 1, a);
        v.set(2, 2, b);
        const Rational a1 = a + Rational(1), b1 = b + Rational(1);
        EXPECT_EQ(gamma_value(v, 2, 2), a1 * a1 + b1 * b1 - (a + b + Rational(2)));
    }
}

TEST(Formulas, GammaAtCriticalRow)
{
    const Jet g = eval_gamma(crit_ctx(), 2, 1);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.coeff(0), Rational(3));
    EXPECT_EQ(g.coeff(1), Rational(0));
}

TEST(Formulas, DOfGammaTwoTwo)
{
    // x = 1 + z21 + e/2, y = 1 + z22 - e/2; gamma_{2,2} = (x+1)^2 + (y+1)^2 - (x+y+2),
    // so D gamma_{2,2} = (x+1) - (y+1) = z21 - z22.
    for (const auto &[z21, z22] : {std::pair{1L, 0L}, {2L, -1L}, {0L, 1L}, {0L, 0L}}) {
        const EvalContext ctx = crit_ctx(shift(3, {{z21, z22}, {0}}));
        const Rational d = d_of(ctx, [](const BasicTableau<Jet> &p) { return gamma_value(p, 2, 2); });
        EXPECT_EQ(d, Rational(z21 - z22));
    }
}

TEST(Formulas, DOfSymmetricAtFixedShift)
{
    const EvalContext ctx = crit_ctx(shift(3, {{1, 1}, {2}}));
    for (int t = 1; t <= 3; ++t) {
        const int m = t < 2 ? 2 : t;
        const Jet g = eval_regular(ctx, [&](const BasicTableau<Jet> &p) { return gamma_value(p, m, t); });
        EXPECT_EQ(g.coeff(1), Rational(0));
    }
}

TEST(Formulas, SymmetricEvenness)
{
    // tau-invariant expressions have even expansions along the path.
    InstanceRng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const SingularPairSpec p{2, 1, 2};
        const Tableau v = random_one_critical_tableau(4, p, rng);
        for (const auto &z : shift_ball(4, 1)) {
            const EvalContext ctx(v, z, p, 2);
            for (int m = 1; m <= 4; ++m) {
                for (int t = 1; t <= m; ++t) {
                    if (m == 2 && !is_tau_fixed(z, p)) {
                        continue;
                    }
                    const Jet g = eval_gamma(ctx, m, t);
                    ASSERT_TRUE(g.is_regular());
                    EXPECT_EQ(g.coeff(1), Rational(0)) << "m=" << m << " t=" << t;
                }
            }
        }
    }
}

TEST(Formulas, TrivialPathMatchesRationalEvaluation)
{
    InstanceRng rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const Tableau v = random_generic_tableau(4, rng);
        const ShiftVector z = shift_ball(4, 1)[static_cast<std::size_t>(trial)];
        const EvalContext ctx(v, z);
        const Tableau pt = apply_shift(v, z);
        for (int k = 1; k <= 4; ++k) {
            EXPECT_EQ(eval_rowsum(ctx, k).coeff(0), rowsum_value(pt, k));
            for (int i = 1; i <= k; ++i) {
                EXPECT_EQ(eval_q(ctx, k, i).coeff(0), q_value(pt, k, i));
                EXPECT_EQ(eval_p(ctx, Sign::minus, k, i).coeff(0), p_value(pt, Sign::minus, k, i));
                if (k < 4) {
                    EXPECT_EQ(eval_p(ctx, Sign::plus, k, i).coeff(0), p_value(pt, Sign::plus, k, i));
                }
            }
            for (int t = 1; t <= k; ++t) {
                EXPECT_EQ(eval_gamma(ctx, k, t).coeff(0), gamma_value(pt, k, t));
            }
        }
    }
}

TEST(Formulas, DOfMatchesPartialDerivatives)
{
    // f = x^2 y: D f = (2xy - x^2)/2, here at x = 3, y = 0.
    const EvalContext ctx = crit_ctx(shift(3, {{2, -1}, {0}}));
    const Rational x(3), y(0);
    const Rational d = d_of(ctx, [](const BasicTableau<Jet> &p) { return p.at(2, 1) * p.at(2, 1) * p.at(2, 2); });
    EXPECT_EQ(d, (Rational(2) * x * y - x * x) / Rational(2));
}

TEST(Formulas, IrregularExpressionIsReported)
{
    const EvalContext ctx = crit_ctx();
    EXPECT_THROW(value_of(ctx, [](const BasicTableau<Jet> &p) { return Rational(1) / (p.at(2, 1) - p.at(2, 2)); }),
                 IrregularCoefficient);
    EXPECT_THROW(d_of(EvalContext(critical3(), ShiftVector(3)), [](const BasicTableau<Jet> &p) { return p.at(1, 1); }),
                 InputError);
}

TEST(Formulas, LemmaExampleReciprocal)
{
    // f = 1/(x - y + 1): (f - tau f)/(x - y) and 2 D f both equal -2/(x - y + 1)^2 at x = y.
    const EvalContext ctx = crit_ctx();
    auto f = [](const BasicTableau<Jet> &p) { return Rational(1) / (p.at(2, 1) - p.at(2, 2) + Rational(1)); };
    const Jet along = f(ctx.path_point());
    const Jet lhs = (along - along.flip()) / ctx.pair_difference();
    EXPECT_TRUE(lhs.is_regular());
    EXPECT_EQ(lhs.coeff(0), Rational(-2));
    EXPECT_EQ(Rational(2) * d_of(ctx, f), Rational(-2));
}

TEST(Formulas, ContextRequiresCriticalBase)
{
    EXPECT_THROW(EvalContext(tab({{"2", "0", "-2"}, {"2", "1"}, {"1"}}), ShiftVector(3), pair212), InputError);
    EXPECT_THROW(EvalContext(critical3(), ShiftVector(2)), InputError);
    EXPECT_EQ(crit_ctx().pair_difference().coeff(1), Rational(1));
}
