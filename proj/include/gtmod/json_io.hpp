#ifndef GTMOD_JSON_IO_HPP
#define GTMOD_JSON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "jet.hpp"
#include "rational.hpp"
#include "representation.hpp"
#include "tableau.hpp"

// JSON encodings. Every rational is a "p" or "p/q" string; integers are accepted on
// input for convenience, floating-point literals never.

namespace gtmod::json
{

using nlohmann::json;

inline json to_json(const Rational &r)
{
    return r.str();
}

inline Rational rational_from_json(const json &j)
{
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::invalid_argument &e) {
            throw InputError(e.what());
        }
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw InputError("rationals are encoded as \"p\" or \"p/q\" strings, got " + j.dump());
}

inline long integer_from_json(const json &j)
{
    const Rational r = rational_from_json(j);
    if (!r.is_integer()) {
        throw InputError("expected an integer, got " + j.dump());
    }
    return r.to_long();
}

inline const json &field(const json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw InputError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

inline int small_int(const json &j, const char *what)
{
    if (!j.is_number_integer()) {
        throw InputError(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

inline json to_json(const Tableau &t)
{
    json rows = json::array();
    for (const auto &row : t.rows()) {
        json r = json::array();
        for (const auto &e : row) {
            r.push_back(e.str());
        }
        rows.push_back(std::move(r));
    }
    return {{"n", t.n()}, {"rows", std::move(rows)}};
}

/// {"n": 3, "rows": [[row 3], [row 2], [row 1]]}
inline Tableau tableau_from_json(const json &j)
{
    const int n = small_int(field(j, "n"), "n");
    const json &rows = field(j, "rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
        throw InputError("tableau needs exactly n rows");
    }
    std::vector<std::vector<Rational>> parsed;
    for (const auto &row : rows) {
        if (!row.is_array()) {
            throw InputError("tableau rows must be arrays");
        }
        std::vector<Rational> r;
        for (const auto &e : row) {
            r.push_back(rational_from_json(e));
        }
        parsed.push_back(std::move(r));
    }
    return Tableau::from_rows(parsed);
}

inline json to_json(const ShiftVector &z)
{
    json rows = json::array();
    for (const auto &row : z.rows()) {
        json r = json::array();
        for (long e : row) {
            r.push_back(std::to_string(e));
        }
        rows.push_back(std::move(r));
    }
    return {{"n", z.n()}, {"rows", std::move(rows)}};
}

/// Same shape as a tableau with the top row omitted.
inline ShiftVector shift_from_json(const json &j)
{
    const int n = small_int(field(j, "n"), "n");
    if (n < 1) {
        throw InputError("n must be positive");
    }
    const json &rows = field(j, "rows");
    if (!rows.is_array()) {
        throw InputError("shift rows must be an array");
    }
    std::vector<std::vector<long>> parsed;
    for (const auto &row : rows) {
        if (!row.is_array()) {
            throw InputError("shift rows must be arrays");
        }
        std::vector<long> r;
        for (const auto &e : row) {
            r.push_back(integer_from_json(e));
        }
        parsed.push_back(std::move(r));
    }
    return ShiftVector::from_rows(n, parsed);
}

inline json to_json(const SingularPairSpec &p)
{
    return json::array({p.k, p.i, p.j});
}

inline SingularPairSpec pair_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 3) {
        throw InputError("a singular pair is [k, i, j]");
    }
    return {small_int(j[0], "k"), small_int(j[1], "i"), small_int(j[2], "j")};
}

inline json to_json(const Classification &c)
{
    json singular = json::array();
    for (const auto &p : c.singular_pairs) {
        singular.push_back(to_json(p));
    }
    json critical = json::array();
    for (const auto &p : c.critical_pairs) {
        critical.push_back(to_json(p));
    }
    return {{"standard", c.standard},
            {"generic", c.generic},
            {"integral", c.integral},
            {"singular_pairs", std::move(singular)},
            {"critical_pairs", std::move(critical)},
            {"is_1_singular", c.is_1_singular},
            {"is_1_critical", c.is_1_critical}};
}

inline json to_json(const ModuleSpec &s)
{
    switch (s.family()) {
    case Family::finite_dim: {
        json lambda = json::array();
        for (long l : s.lambda()) {
            lambda.push_back(std::to_string(l));
        }
        return {{"family", "FiniteDim"}, {"n", s.n()}, {"lambda", std::move(lambda)}};
    }
    case Family::generic:
        return {{"family", "Generic"}, {"tableau", to_json(s.point())}};
    case Family::one_singular:
        return {{"family", "OneSingular"}, {"tableau", to_json(s.point())}, {"pair", to_json(s.pair())}};
    }
    return {};
}

inline ModuleSpec spec_from_json(const json &j)
{
    const json &fam = field(j, "family");
    if (!fam.is_string()) {
        throw InputError("family must be a string");
    }
    const auto name = fam.get<std::string>();
    if (name == "FiniteDim") {
        const json &lam = field(j, "lambda");
        if (!lam.is_array()) {
            throw InputError("lambda must be an array");
        }
        std::vector<long> lambda;
        for (const auto &e : lam) {
            lambda.push_back(integer_from_json(e));
        }
        if (j.contains("n") && small_int(j.at("n"), "n") != static_cast<int>(lambda.size())) {
            throw InputError("n does not match the length of lambda");
        }
        return ModuleSpec::finite_dim(std::move(lambda));
    }
    if (name == "Generic") {
        return ModuleSpec::generic(tableau_from_json(field(j, "tableau")));
    }
    if (name == "OneSingular") {
        std::optional<SingularPairSpec> pair;
        if (j.contains("pair")) {
            pair = pair_from_json(j.at("pair"));
        }
        return ModuleSpec::one_singular(tableau_from_json(field(j, "tableau")), pair);
    }
    throw InputError("unknown module family \"" + name + "\"");
}

inline json to_json(const BasisTag &t)
{
    switch (t.kind) {
    case TagKind::standard:
        return {{"kind", "Std"}, {"tableau", to_json(t.tableau)}};
    case TagKind::generic:
        return {{"kind", "Gen"}, {"shift", to_json(t.shift)}};
    case TagKind::symmetric:
        return {{"kind", "Sym"}, {"shift", to_json(t.shift)}};
    case TagKind::antisymmetric:
        return {{"kind", "Alt"}, {"shift", to_json(t.shift)}};
    }
    return {};
}

inline BasisTag tag_from_json(const json &j)
{
    const json &kind = field(j, "kind");
    if (!kind.is_string()) {
        throw InputError("tag kind must be a string");
    }
    const auto k = kind.get<std::string>();
    if (k == "Std") {
        return BasisTag::standard(tableau_from_json(field(j, "tableau")));
    }
    if (k == "Gen") {
        return BasisTag::gen(shift_from_json(field(j, "shift")));
    }
    if (k == "Sym") {
        return BasisTag::sym(shift_from_json(field(j, "shift")));
    }
    if (k == "Alt") {
        return BasisTag::alt(shift_from_json(field(j, "shift")));
    }
    throw InputError("unknown tag kind \"" + k + "\"");
}

inline json to_json(const ModuleVector &v)
{
    json terms = json::array();
    for (const auto &[tag, c] : v.terms()) {
        terms.push_back({{"tag", to_json(tag)}, {"coeff", c.str()}});
    }
    return {{"spec", to_json(v.spec())}, {"terms", std::move(terms)}};
}

/// Terms are validated against the spec and tau-canonicalized on the way in.
inline ModuleVector vector_from_json(const json &j, std::shared_ptr<const ModuleSpec> spec)
{
    ModuleVector v(std::move(spec));
    const json &terms = field(j, "terms");
    if (!terms.is_array()) {
        throw InputError("terms must be an array");
    }
    for (const auto &t : terms) {
        v.add(tag_from_json(field(t, "tag")), rational_from_json(field(t, "coeff")));
    }
    return v;
}

inline ModuleVector vector_from_json(const json &j)
{
    return vector_from_json(j, std::make_shared<const ModuleSpec>(spec_from_json(field(j, "spec"))));
}

inline json to_json(const Jet &jet)
{
    json coeffs = json::array();
    for (const auto &c : jet.coeffs()) {
        coeffs.push_back(c.str());
    }
    return {{"min_exp", jet.min_exp()}, {"trunc", jet.trunc_order()}, {"coeffs", std::move(coeffs)}};
}

} // namespace gtmod::json

#endif
