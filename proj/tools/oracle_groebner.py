#!/usr/bin/env python3
"""Independent Groebner-basis oracle (sympy).

Prints reduced Groebner bases and normal forms for the fixed inputs frozen
into tests/test_groebner.cpp.  Run from anywhere; output is the reference.
"""

import sympy
from sympy import GF, QQ, groebner, symbols

x, y, z = symbols("x1 x2 x3")


def show(tag, polys, order, domain, gens):
    g = groebner(polys, *gens, order=order, domain=domain)
    print(f"{tag}: {list(g.exprs)}")
    return g


def main():
    # Redundant generator collapses.
    show("gb_x_x2_lex_QQ", [x, x**2], "lex", QQ, [x])

    # Classic two-generator example, lex elimination.
    show("gb_circle_lex_QQ", [x**2 - 1, x * y - 1], "lex", QQ, [x, y])
    show("gb_circle_grevlex_QQ", [x**2 - 1, x * y - 1], "grevlex", QQ, [x, y])

    # Over GF(2) with field equations adjoined: x^2 ~ x.
    show("gb_x2_sat_lex_GF2", [x**2, x**2 + x], "lex", GF(2), [x])

    # Three variables, grevlex over QQ.
    show("gb_cyclic_grevlex_QQ", [x + y + z, x * y + y * z + z * x, x * y * z - 1],
         "grevlex", QQ, [x, y, z])

    # Normal forms.
    g = groebner([x**2 - 1, x * y - 1], x, y, order="lex", domain=QQ)
    print("nf_x3y_circle_lex_QQ:", g.reduce(x**3 * y)[1])
    print("nf_x2_circle_lex_QQ:", g.reduce(x**2)[1])

    g2 = groebner([x**2 + x], x, order="lex", domain=GF(2))
    print("nf_x5_GF2:", g2.reduce(x**5)[1])

    # GF(3), two vars, saturated system x^3-x, y^3-y plus x+y.
    g3 = groebner([x + y, x**3 - x, y**3 - y], x, y, order="grevlex", domain=GF(3))
    print("gb_sum_sat_grevlex_GF3:", list(g3.exprs))
    print("nf_xy_GF3:", g3.reduce(x * y)[1])

    # GF(5) inverse pair: x*y - 1, with saturation.
    g5 = groebner([x * y - 1, x**5 - x, y**5 - y], x, y, order="lex", domain=GF(5))
    print("gb_invpair_lex_GF5:", list(g5.exprs))


if __name__ == "__main__":
    main()
