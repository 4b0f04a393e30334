#ifndef GTMOD_REPRESENTATION_HPP
#define GTMOD_REPRESENTATION_HPP

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "formulas.hpp"
#include "jet.hpp"
#include "rational.hpp"
#include "tableau.hpp"

namespace gtmod
{

enum class Family { finite_dim, generic, one_singular };

/// Which module a vector lives in, with its defining data.
class ModuleSpec
{
public:
    /// V(lambda) for a dominant integral weight lambda_1 >= ... >= lambda_n.
    static ModuleSpec finite_dim(std::vector<long> lambda)
    {
        const int n = static_cast<int>(lambda.size());
        if (n < 2) {
            throw InputError("gl(n) needs n >= 2");
        }
        for (std::size_t idx = 1; idx < lambda.size(); ++idx) {
            if (lambda[idx - 1] < lambda[idx]) {
                throw InputError("weight is not dominant");
            }
        }
        ModuleSpec s;
        s.m_family = Family::finite_dim;
        s.m_n = n;
        s.m_lambda = std::move(lambda);
        return s;
    }

    /// V(T(v)) for a generic v.
    static ModuleSpec generic(Tableau v)
    {
        if (v.n() < 2) {
            throw InputError("gl(n) needs n >= 2");
        }
        if (!classify(v).generic) {
            throw InputError("tableau is not generic");
        }
        ModuleSpec s;
        s.m_family = Family::generic;
        s.m_n = v.n();
        s.m_point = std::move(v);
        return s;
    }

    /// The 1-singular module at v; a 1-singular non-critical v is moved to its critical representative.
    static ModuleSpec one_singular(Tableau v, std::optional<SingularPairSpec> pair = std::nullopt)
    {
        if (v.n() < 2) {
            throw InputError("gl(n) needs n >= 2");
        }
        const Classification c = classify(v);
        if (!c.is_1_singular) {
            throw InputError("tableau is not 1-singular");
        }
        const SingularPairSpec found = c.singular_pairs.front();
        if (pair && *pair != found) {
            throw InputError("the singular pair of the tableau differs from the requested pair");
        }
        pair = found;
        pair->validate(v.n());
        if (v.at(pair->k, pair->i) != v.at(pair->k, pair->j)) {
            v.set(pair->k, pair->j, v.at(pair->k, pair->i));
        }
        ModuleSpec s;
        s.m_family = Family::one_singular;
        s.m_n = v.n();
        s.m_point = std::move(v);
        s.m_pair = pair;
        return s;
    }

    Family family() const
    {
        return m_family;
    }
    int n() const
    {
        return m_n;
    }
    const std::vector<long> &lambda() const
    {
        return m_lambda;
    }
    const Tableau &point() const
    {
        return m_point;
    }
    const SingularPairSpec &pair() const
    {
        if (!m_pair) {
            throw InputError("module has no singular pair");
        }
        return *m_pair;
    }

    /// Top row (lambda_1, lambda_2 - 1, ..., lambda_n - n + 1) of the basis tableaux of V(lambda).
    std::vector<long> top_row() const
    {
        std::vector<long> r;
        for (int i = 0; i < m_n; ++i) {
            r.push_back(m_lambda[static_cast<std::size_t>(i)] - i);
        }
        return r;
    }

    friend bool operator==(const ModuleSpec &, const ModuleSpec &) = default;

private:
    ModuleSpec() = default;

    Family m_family = Family::finite_dim;
    int m_n = 0;
    std::vector<long> m_lambda;
    Tableau m_point;
    std::optional<SingularPairSpec> m_pair;
};

enum class TagKind { standard, generic, symmetric, antisymmetric };

/// Basis label: Std(tableau) | Gen(z) | Sym(z) | Alt(z).
struct BasisTag {
    TagKind kind = TagKind::standard;
    Tableau tableau; // standard tags only
    ShiftVector shift; // the other kinds

    static BasisTag standard(Tableau t)
    {
        return {TagKind::standard, std::move(t), {}};
    }
    static BasisTag gen(ShiftVector z)
    {
        return {TagKind::generic, {}, std::move(z)};
    }
    static BasisTag sym(ShiftVector z)
    {
        return {TagKind::symmetric, {}, std::move(z)};
    }
    static BasisTag alt(ShiftVector z)
    {
        return {TagKind::antisymmetric, {}, std::move(z)};
    }

    friend bool operator==(const BasisTag &, const BasisTag &) = default;
    friend auto operator<=>(const BasisTag &a, const BasisTag &b)
    {
        if (auto c = a.kind <=> b.kind; c != 0) {
            return c;
        }
        if (auto c = a.tableau <=> b.tableau; c != 0) {
            return c;
        }
        return a.shift <=> b.shift;
    }
};

/// The canonical member of {z, tau z}: the one with z_{k,i} >= z_{k,j}.
inline bool is_canonical(const ShiftVector &z, const SingularPairSpec &p)
{
    return z.at(p.k, p.i) >= z.at(p.k, p.j);
}

/// Finite rational combination of basis tags of one module.
class ModuleVector
{
public:
    using Terms = std::map<BasisTag, Rational>;

    explicit ModuleVector(std::shared_ptr<const ModuleSpec> spec) : m_spec(std::move(spec)) {}
    explicit ModuleVector(ModuleSpec spec) : m_spec(std::make_shared<const ModuleSpec>(std::move(spec))) {}

    const ModuleSpec &spec() const
    {
        return *m_spec;
    }
    const std::shared_ptr<const ModuleSpec> &spec_ptr() const
    {
        return m_spec;
    }
    const Terms &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    /// Coefficient of a canonical tag (zero when absent).
    Rational coeff(const BasisTag &tag) const
    {
        auto it = m_terms.find(tag);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    /// Add c * tag, validating the tag and absorbing the tau-canonicalization of Sym/Alt.
    ModuleVector &add(const BasisTag &tag, const Rational &c)
    {
        validate(tag);
        if (tag.kind == TagKind::symmetric || tag.kind == TagKind::antisymmetric) {
            const SingularPairSpec &p = m_spec->pair();
            if (tag.kind == TagKind::antisymmetric && is_tau_fixed(tag.shift, p)) {
                return *this; // A(z) = 0 when z = tau z
            }
            if (!is_canonical(tag.shift, p)) {
                BasisTag canon{tag.kind, {}, tau_apply(tag.shift, p)};
                return add_raw(canon, tag.kind == TagKind::antisymmetric ? -c : c);
            }
        }
        return add_raw(tag, c);
    }

    /// Add an already canonical, valid tag.
    ModuleVector &add_raw(const BasisTag &tag, const Rational &c)
    {
        if (c.is_zero()) {
            return *this;
        }
        auto [it, inserted] = m_terms.try_emplace(tag, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
        return *this;
    }

    ModuleVector &add_scaled(const ModuleVector &o, const Rational &c)
    {
        require_same(o);
        if (c.is_zero()) {
            return *this;
        }
        for (const auto &[tag, coeff] : o.m_terms) {
            add_raw(tag, coeff * c);
        }
        return *this;
    }

    ModuleVector &operator+=(const ModuleVector &o)
    {
        return add_scaled(o, Rational(1));
    }
    ModuleVector &operator-=(const ModuleVector &o)
    {
        return add_scaled(o, Rational(-1));
    }
    friend ModuleVector operator+(ModuleVector a, const ModuleVector &b)
    {
        return a += b;
    }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector &b)
    {
        return a -= b;
    }
    friend ModuleVector operator*(const Rational &c, const ModuleVector &v)
    {
        ModuleVector r(v.m_spec);
        return r.add_scaled(v, c);
    }

    friend bool operator==(const ModuleVector &a, const ModuleVector &b)
    {
        return (a.m_spec == b.m_spec || *a.m_spec == *b.m_spec) && a.m_terms == b.m_terms;
    }

    /// Throws InputError if the tag cannot label a basis vector of this module.
    void validate(const BasisTag &tag) const
    {
        const ModuleSpec &s = *m_spec;
        switch (tag.kind) {
        case TagKind::standard: {
            if (s.family() != Family::finite_dim) {
                throw InputError("Std tags belong to finite-dimensional modules");
            }
            if (tag.tableau.n() != s.n()) {
                throw InputError("tableau size does not match the module");
            }
            const auto top = s.top_row();
            for (int i = 1; i <= s.n(); ++i) {
                if (tag.tableau.at(s.n(), i) != Rational(top[static_cast<std::size_t>(i - 1)])) {
                    throw InputError("tableau top row does not match the highest weight");
                }
            }
            if (!is_standard(tag.tableau)) {
                throw InputError("tableau is not standard");
            }
            break;
        }
        case TagKind::generic:
            if (s.family() != Family::generic) {
                throw InputError("Gen tags belong to generic modules");
            }
            if (tag.shift.n() != s.n()) {
                throw InputError("shift size does not match the module");
            }
            break;
        case TagKind::symmetric:
        case TagKind::antisymmetric:
            if (s.family() != Family::one_singular) {
                throw InputError("Sym/Alt tags belong to 1-singular modules");
            }
            if (tag.shift.n() != s.n()) {
                throw InputError("shift size does not match the module");
            }
            break;
        }
    }

private:
    void require_same(const ModuleVector &o) const
    {
        if (m_spec != o.m_spec && !(*m_spec == *o.m_spec)) {
            throw InputError("vectors live in different modules");
        }
    }

    std::shared_ptr<const ModuleSpec> m_spec;
    Terms m_terms;
};

struct Options {
    int trunc = Jet::default_order;
    int floor = Jet::default_floor;
    Mutation mutation = Mutation::none;
};

/// One term of a Gelfand-Tsetlin formula: coefficient of T(P + step * delta^{row,col}).
template <class Field>
struct GtTerm {
    int row;
    int col;
    int step; // +1, -1, or 0 for the diagonal
    Field coeff;
};

/// E_{a,b}, |a - b| <= 1, on the tableau vector T(P) by the Gelfand-Tsetlin formulas.
template <class Field>
std::vector<GtTerm<Field>> gt_terms(const BasicTableau<Field> &pt, int a, int b, Mutation mut)
{
    const int n = pt.n();
    if (a < 1 || b < 1 || a > n || b > n || std::abs(a - b) > 1) {
        throw InputError("Chevalley generator E(" + std::to_string(a) + "," + std::to_string(b)
                         + ") out of range");
    }
    std::vector<GtTerm<Field>> out;
    if (a == b) {
        out.push_back({a, 1, 0, weight_value(pt, a)});
        return out;
    }
    const int t = std::min(a, b);
    for (int s = 1; s <= t; ++s) {
        const Field q = q_value(pt, t, s);
        if (is_zero(q)) {
            throw PoleWithoutPath("q_{" + std::to_string(t) + "," + std::to_string(s)
                                  + "} vanishes at a critical row with no path attached");
        }
        if (b == a + 1) {
            Field c = p_value(pt, Sign::plus, t, s, mut) / q;
            if (mut != Mutation::sign_e12) {
                c = -c;
            }
            out.push_back({t, s, +1, std::move(c)});
        } else {
            out.push_back({t, s, -1, p_value(pt, Sign::minus, t, s, mut) / q});
        }
    }
    return out;
}

/// Coefficient jets of a 1-singular action, in the reduced S/A basis, before evaluation at the point.
using JetTerms = std::map<BasisTag, Jet>;

/// Standard tableaux with top row (lambda_1, lambda_2 - 1, ..., lambda_n - n + 1), sorted.
inline std::vector<Tableau> fd_basis(const std::vector<long> &lambda)
{
    const ModuleSpec spec = ModuleSpec::finite_dim(lambda);
    const int n = spec.n();
    const auto top = spec.top_row();
    std::vector<std::vector<long>> rows(static_cast<std::size_t>(n + 1));
    rows[static_cast<std::size_t>(n)] = top;
    std::vector<Tableau> out;
    auto rec = [&](auto &&self, int k) -> void {
        // rows[k] is fixed; fill row k-1 with w_i, rows[k][i-1] >= w_i > rows[k][i].
        if (k == 1) {
            Tableau t(n, Rational(0));
            for (int r = 1; r <= n; ++r) {
                for (int i = 1; i <= r; ++i) {
                    t.set(r, i, Rational(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(i - 1)]));
                }
            }
            out.push_back(std::move(t));
            return;
        }
        const auto &upper = rows[static_cast<std::size_t>(k)];
        auto &lower = rows[static_cast<std::size_t>(k - 1)];
        lower.assign(static_cast<std::size_t>(k - 1), 0);
        auto fill = [&](auto &&fill_self, int i) -> void {
            if (i == k) {
                self(self, k - 1);
                return;
            }
            const auto idx = static_cast<std::size_t>(i - 1);
            for (long w = upper[idx + 1] + 1; w <= upper[idx]; ++w) {
                lower[idx] = w;
                fill_self(fill_self, i + 1);
            }
        };
        fill(fill, 1);
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// dim V(lambda) = prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i).
inline long weyl_dim(const std::vector<long> &lambda)
{
    (void)ModuleSpec::finite_dim(lambda);
    Rational d(1);
    const int n = static_cast<int>(lambda.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d *= Rational(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
        }
    }
    return d.to_long();
}

/// Action of U(gl(n)) on one of the three module families.
/**
 * Chevalley generators act by the Gelfand-Tsetlin formulas. Finite-dimensional
 * modules evaluate them at the tableau and drop non-standard results; generic
 * modules evaluate them at v + z. On a 1-singular module every Sym/Alt tag is
 * first expanded into T(z), T(tau z) with jet coefficients along the critical
 * path (so A(z) carries 1/(2(x - y))), the formulas are applied to each T, and
 * the result is re-expanded through T(u) = S(u) + (x - y) A(u). The resulting
 * coefficient jets must be regular; their e^0 coefficients are the action on
 * the fiber at v.
 *
 * General E(a,b) are commutators of Chevalley generators and c_{m,t} is the
 * sum of words E_{i1,i2} E_{i2,i3} ... E_{it,i1}. Results on single tags are
 * memoized; the cache is internal and guarded, so a Representation may be
 * shared between threads.
 */
class Representation
{
public:
    explicit Representation(ModuleSpec spec, Options opts = {})
        : m_spec(std::make_shared<const ModuleSpec>(std::move(spec))), m_opts(opts)
    {
        if (m_opts.trunc < 1) {
            throw InputError("truncation order must be at least 1");
        }
    }

    const ModuleSpec &spec() const
    {
        return *m_spec;
    }
    const std::shared_ptr<const ModuleSpec> &spec_ptr() const
    {
        return m_spec;
    }
    const Options &options() const
    {
        return m_opts;
    }
    int n() const
    {
        return m_spec->n();
    }

    ModuleVector zero() const
    {
        return ModuleVector(m_spec);
    }
    ModuleVector vector(const BasisTag &tag, const Rational &c = Rational(1)) const
    {
        ModuleVector v(m_spec);
        v.add(tag, c);
        return v;
    }

    /// E(a,b) with |a - b| <= 1.
    ModuleVector act_chevalley(const ModuleVector &vec, int a, int b) const
    {
        require_chevalley(a, b);
        return act(vec, a, b);
    }

    /// Any E(a,b), 1 <= a,b <= n.
    ModuleVector act(const ModuleVector &vec, int a, int b) const
    {
        require_mine(vec);
        require_index(a);
        require_index(b);
        ModuleVector out(m_spec);
        for (const auto &[tag, c] : vec.terms()) {
            out.add_scaled(act_on_tag(tag, a, b), c);
        }
        return out;
    }

    /// c_{m,t} = sum over (i_1..i_t) in [m]^t of E_{i1,i2} E_{i2,i3} ... E_{it,i1}, rightmost first.
    ModuleVector act_casimir(const ModuleVector &vec, int m, int t) const
    {
        if (!(1 <= t && t <= m && m <= n())) {
            throw InputError("c_{m,t} needs 1 <= t <= m <= n");
        }
        require_mine(vec);
        ModuleVector total(m_spec);
        // Word sums factor through partial products: for fixed i_1 the vectors
        // u[j] = sum over the tail of E_{j,...} ... E_{..,i_1} vec are built right to left.
        for (int first = 1; first <= m; ++first) {
            if (t == 1) {
                total += act(vec, first, first);
                continue;
            }
            std::vector<ModuleVector> u;
            for (int j = 1; j <= m; ++j) {
                u.push_back(act(vec, j, first));
            }
            for (int step = 0; step < t - 2; ++step) {
                std::vector<ModuleVector> next;
                for (int j = 1; j <= m; ++j) {
                    ModuleVector acc(m_spec);
                    for (int l = 1; l <= m; ++l) {
                        acc += act(u[static_cast<std::size_t>(l - 1)], j, l);
                    }
                    next.push_back(std::move(acc));
                }
                u = std::move(next);
            }
            for (int l = 1; l <= m; ++l) {
                total += act(u[static_cast<std::size_t>(l - 1)], first, l);
            }
        }
        return total;
    }

    /// E(a,b) on a single basis tag (memoized).
    ModuleVector act_on_tag(const BasisTag &tag, int a, int b) const
    {
        const Key key{a, b, tag};
        {
            std::lock_guard<std::mutex> lock(m_cache->mutex);
            auto it = m_cache->results.find(key);
            if (it != m_cache->results.end()) {
                return it->second;
            }
        }
        ModuleVector result = std::abs(a - b) <= 1 ? chevalley_on_tag(tag, a, b) : commutator_on_tag(tag, a, b);
        std::lock_guard<std::mutex> lock(m_cache->mutex);
        m_cache->results.emplace(key, result);
        return result;
    }

    /// Coefficient jets of a Chevalley generator on a Sym/Alt tag, re-expanded in the S/A basis.
    JetTerms chevalley_jets(const BasisTag &tag, int a, int b) const
    {
        require_chevalley(a, b);
        if (m_spec->family() != Family::one_singular) {
            throw InputError("coefficient jets are only defined on 1-singular modules");
        }
        ModuleVector(m_spec).validate(tag);
        const SingularPairSpec &p = m_spec->pair();
        const EvalContext ctx(m_spec->point(), ShiftVector(n()), p, m_opts.trunc, m_opts.floor);
        const Jet x_minus_y = ctx.pair_difference();

        // Expand the tag in the T basis.
        std::vector<std::pair<ShiftVector, Jet>> components;
        const int order = ctx.working_order();
        if (tag.kind == TagKind::symmetric) {
            if (is_tau_fixed(tag.shift, p)) {
                components.emplace_back(tag.shift, Jet::constant(Rational(1), order, m_opts.floor));
            } else {
                const Jet half = Jet::constant(Rational(1, 2), order, m_opts.floor);
                components.emplace_back(tag.shift, half);
                components.emplace_back(tau_apply(tag.shift, p), half);
            }
        } else if (tag.kind == TagKind::antisymmetric) {
            if (is_tau_fixed(tag.shift, p)) {
                return {};
            }
            const Jet inv = Rational(1) / (x_minus_y * Rational(2));
            components.emplace_back(tag.shift, inv);
            components.emplace_back(tau_apply(tag.shift, p), -inv);
        }

        std::map<ShiftVector, Jet> t_terms;
        for (const auto &[z, c] : components) {
            const BasicTableau<Jet> pt = ctx.path_point_for(z);
            for (auto &term : gt_terms(pt, a, b, m_opts.mutation)) {
                ShiftVector target = z;
                if (term.step != 0) {
                    target.set(term.row, term.col, z.at(term.row, term.col) + term.step);
                }
                Jet contribution = c * term.coeff;
                auto [it, inserted] = t_terms.try_emplace(target, contribution);
                if (!inserted) {
                    it->second += contribution;
                }
            }
        }

        // T(u) = S(u) + (x - y) A(u), with A(tau u) = -A(u) and A(u) = 0 when u = tau u.
        JetTerms out;
        auto accumulate = [&out](BasisTag t, const Jet &j) {
            auto [it, inserted] = out.try_emplace(std::move(t), j);
            if (!inserted) {
                it->second += j;
            }
        };
        for (const auto &[u, j] : t_terms) {
            if (is_tau_fixed(u, p)) {
                accumulate(BasisTag::sym(u), j);
                continue;
            }
            const bool canonical = is_canonical(u, p);
            const ShiftVector canon = canonical ? u : tau_apply(u, p);
            accumulate(BasisTag::sym(canon), j);
            const Jet alt = j * x_minus_y;
            if (canonical || m_opts.mutation == Mutation::swap_tau) {
                accumulate(BasisTag::alt(canon), alt);
            } else {
                accumulate(BasisTag::alt(canon), -alt);
            }
        }
        return out;
    }

    /// Drop the memoized single-tag results.
    void clear_cache() const
    {
        std::lock_guard<std::mutex> lock(m_cache->mutex);
        m_cache->results.clear();
    }

private:
    using Key = std::tuple<int, int, BasisTag>;
    struct Cache {
        std::mutex mutex;
        std::map<Key, ModuleVector> results;
    };

    void require_index(int a) const
    {
        if (a < 1 || a > n()) {
            throw InputError("generator index " + std::to_string(a) + " out of range for gl("
                             + std::to_string(n()) + ")");
        }
    }
    void require_chevalley(int a, int b) const
    {
        require_index(a);
        require_index(b);
        if (std::abs(a - b) > 1) {
            throw InputError("E(" + std::to_string(a) + "," + std::to_string(b)
                             + ") is not a Chevalley generator");
        }
    }
    void require_mine(const ModuleVector &vec) const
    {
        if (vec.spec_ptr() != m_spec && !(vec.spec() == *m_spec)) {
            throw InputError("vector does not belong to this module");
        }
    }

    ModuleVector chevalley_on_tag(const BasisTag &tag, int a, int b) const
    {
        ModuleVector out(m_spec);
        switch (m_spec->family()) {
        case Family::finite_dim: {
            if (tag.kind != TagKind::standard) {
                throw InputError("finite-dimensional modules carry Std tags");
            }
            for (auto &term : gt_terms(tag.tableau, a, b, m_opts.mutation)) {
                Tableau target = tag.tableau;
                if (term.step != 0) {
                    target.set(term.row, term.col, target.at(term.row, term.col) + Rational(term.step));
                    if (!is_standard(target)) {
                        continue;
                    }
                }
                out.add_raw(BasisTag::standard(std::move(target)), term.coeff);
            }
            break;
        }
        case Family::generic: {
            if (tag.kind != TagKind::generic) {
                throw InputError("generic modules carry Gen tags");
            }
            const Tableau pt = apply_shift(m_spec->point(), tag.shift);
            for (auto &term : gt_terms(pt, a, b, m_opts.mutation)) {
                ShiftVector target = tag.shift;
                if (term.step != 0) {
                    target.set(term.row, term.col, target.at(term.row, term.col) + term.step);
                }
                out.add_raw(BasisTag::gen(std::move(target)), term.coeff);
            }
            break;
        }
        case Family::one_singular:
            for (const auto &[t, j] : chevalley_jets(tag, a, b)) {
                if (!j.is_regular()) {
                    throw IrregularCoefficient("coefficient of a 1-singular action has a pole: " + j.str());
                }
                if (t.kind == TagKind::antisymmetric && is_tau_fixed(t.shift, m_spec->pair())) {
                    continue;
                }
                out.add_raw(t, j.coeff(0));
            }
            break;
        }
        return out;
    }

    // E(a,b) = E(a,m) E(m,b) - E(m,b) E(a,m), m adjacent to b on the side of a.
    ModuleVector commutator_on_tag(const BasisTag &tag, int a, int b) const
    {
        const int mid = a < b ? b - 1 : b + 1;
        const ModuleVector single = vector_raw(tag);
        ModuleVector out = act(act(single, mid, b), a, mid);
        out -= act(act(single, a, mid), mid, b);
        return out;
    }

    ModuleVector vector_raw(const BasisTag &tag) const
    {
        ModuleVector v(m_spec);
        v.add_raw(tag, Rational(1));
        return v;
    }

    std::shared_ptr<const ModuleSpec> m_spec;
    Options m_opts;
    std::shared_ptr<Cache> m_cache = std::make_shared<Cache>();
};

} // namespace gtmod

#endif
