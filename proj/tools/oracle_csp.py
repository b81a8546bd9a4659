#!/usr/bin/env python3
"""Independent model-count oracle: brute-force enumeration in Python for a
handful of fixed polynomial systems and CNF formulas.  The counts frozen into
the C++ tests come from this route, disjoint from both C++ routes (diagram
pipeline and C++ brute force)."""

import itertools

from gf import GF


def count_system(F, nvars, polys):
    n = 0
    for point in itertools.product(F.elements(), repeat=nvars):
        if all(p(F, point) == F.zero() for p in polys):
            n += 1
    return n


def count_cnf(nvars, clauses):
    n = 0
    for bits in itertools.product((0, 1), repeat=nvars):
        ok = True
        for cl in clauses:
            if not any((bits[abs(l) - 1] == 1) == (l > 0) for l in cl):
                ok = False
                break
        if ok:
            n += 1
    return n


def main():
    F2, F3, F4, F5 = GF(2), GF(3), GF(2, 2), GF(5)

    print("x+y, x*y-1 over F_3:",
          count_system(F3, 2, [lambda F, v: F.add(v[0], v[1]),
                               lambda F, v: F.add(F.mul(v[0], v[1]), F.neg(F.one()))]))
    print("x^2+y^2-1 over F_5:",
          count_system(F5, 2, [lambda F, v: F.add(F.add(F.mul(v[0], v[0]), F.mul(v[1], v[1])),
                                                  F.neg(F.one()))]))
    print("x*y*z-1 over F_4:",
          count_system(F4, 3, [lambda F, v: F.add(F.mul(F.mul(v[0], v[1]), v[2]),
                                                  F.neg(F.one()))]))
    print("x^2-x over F_4:",
          count_system(F4, 1, [lambda F, v: F.add(F.mul(v[0], v[0]), F.neg(v[0]))]))
    print("x1+x2+x3, x1*x2 over F_2:",
          count_system(F2, 3, [lambda F, v: F.add(F.add(v[0], v[1]), v[2]),
                               lambda F, v: F.mul(v[0], v[1])]))

    print("cnf [(1,2)]:", count_cnf(2, [(1, 2)]))
    print("cnf [(1,2),(-1,3),(2,-3)]:", count_cnf(3, [(1, 2), (-1, 3), (2, -3)]))
    print("cnf [(1,), (-1,)]:", count_cnf(1, [(1,), (-1,)]))
    print("cnf [(1,2,3),(-1,-2),(-2,-3),(-1,-3)]:",
          count_cnf(3, [(1, 2, 3), (-1, -2), (-2, -3), (-1, -3)]))
    print("cnf [] over 4 vars:", count_cnf(4, []))


if __name__ == "__main__":
    main()
