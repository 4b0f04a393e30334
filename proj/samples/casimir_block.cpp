// c_{2,2} on a 1-singular gl(3) module: a 2x2 Jordan block on span{S(z), A(z)}.
#include <iostream>

#include <gtmod/json_io.hpp>
#include <gtmod/representation.hpp>

using namespace gtmod;

int main()
{
    const Tableau v = Tableau::from_rows({{Rational(2), Rational(0), Rational(-2)}, {Rational(1), Rational(1)}, {Rational(1)}});
    const Representation rep(ModuleSpec::one_singular(v));

    ShiftVector z(3);
    z.set(2, 1, 1); // row 2 shifted by (1, 0)

    const ModuleVector alt = rep.vector(BasisTag::alt(z));
    const ModuleVector c_alt = rep.act_casimir(alt, 2, 2);
    std::cout << json::to_json(c_alt).dump(2) << "\n";

    // E(1,3) is built from commutators of Chevalley generators.
    const ModuleVector sym = rep.vector(BasisTag::sym(ShiftVector(3)));
    std::cout << json::to_json(rep.act(sym, 3, 1)).dump(2) << "\n";
}
