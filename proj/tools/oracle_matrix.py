#!/usr/bin/env python3
"""Independent counting-matrix oracle.

Evaluates small diagrams directly as natural-number matrices built from the
generator relations (rows index inputs, columns outputs, mixed radix with the
leftmost wire most significant).  No Groebner bases, no cospans — pure tuple
enumeration, so the values frozen into the C++ tests come from a disjoint
route.
"""

import itertools

from gf import GF


def matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


def kron(A, B):
    ra, ca, rb, cb = len(A), len(A[0]), len(B), len(B[0])
    out = [[0] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = A[i][j] * B[k][l]
    return out


def relation_matrix(F, nin, nout, holds):
    """Matrix of the relation `holds(ins, outs)` (0/1 entries)."""
    rows = F.q ** nin
    cols = F.q ** nout
    M = [[0] * cols for _ in range(rows)]
    for ins in itertools.product(F.elements(), repeat=nin):
        for outs in itertools.product(F.elements(), repeat=nout):
            if holds(ins, outs):
                r = 0
                for x in ins:
                    r = r * F.q + F.index(x)
                c = 0
                for y in outs:
                    c = c * F.q + F.index(y)
                M[r][c] = 1
    return M


def gen(F, name, *args):
    if name == "copy":
        return relation_matrix(F, 1, 2, lambda i, o: o[0] == i[0] and o[1] == i[0])
    if name == "del":
        return relation_matrix(F, 1, 0, lambda i, o: True)
    if name == "add":
        return relation_matrix(F, 2, 1, lambda i, o: o[0] == F.add(i[0], i[1]))
    if name == "zero":
        return relation_matrix(F, 0, 1, lambda i, o: o[0] == F.zero())
    if name == "mul":
        return relation_matrix(F, 2, 1, lambda i, o: o[0] == F.mul(i[0], i[1]))
    if name == "one":
        return relation_matrix(F, 0, 1, lambda i, o: o[0] == F.one())
    if name == "sc":
        c = F.from_int(args[0])
        return relation_matrix(F, 1, 1, lambda i, o: o[0] == F.mul(c, i[0]))
    if name == "id":
        return relation_matrix(F, 1, 1, lambda i, o: o[0] == i[0])
    if name == "swap":
        return relation_matrix(F, 2, 2, lambda i, o: o == (i[1], i[0]))
    raise ValueError(name)


def dag(M):
    return [list(r) for r in zip(*M)]


def spider(F, n, m):
    return relation_matrix(F, n, m, lambda i, o: len(set(i + o)) <= 1)


def fn_matrix(F, n, fs):
    """Matrix of the polynomial map x -> (f_1(x), ..., f_m(x))."""
    return relation_matrix(F, n, len(fs), lambda i, o: all(o[k] == f(F, i) for k, f in enumerate(fs)))


def gadget(F, n, gens):
    return relation_matrix(F, n, n, lambda i, o: i == o and all(g(F, i) == F.zero() for g in gens))


def show(label, M):
    print(f"{label}: rows={len(M)} cols={len(M[0])}")
    print("  " + str(M))


def main():
    F2, F3, F4, F5 = GF(2), GF(3), GF(2, 2), GF(5)

    show("mult F_3", gen(F3, "mul"))
    show("copy;add F_4", matmul(gen(F4, "copy"), gen(F4, "add")))
    show("(copy*id);(id*add) F_3", matmul(kron(gen(F3, "copy"), gen(F3, "id")),
                                          kron(gen(F3, "id"), gen(F3, "add"))))
    show("spider(2,2) F_2", spider(F2, 2, 2))
    show("spider(2,1);spider(1,2) F_3", matmul(spider(F3, 2, 1), spider(F3, 1, 2)))

    # cup = copy-spider 0->2, cap = 2->0; the closed loop counts the field.
    for F in (F2, F3, F4, F5):
        show(f"cup;cap q={F.q}", matmul(spider(F, 0, 2), spider(F, 2, 0)))

    show("fn (x1+x2, x1*x2) F_3",
         fn_matrix(F3, 2, [lambda F, x: F.add(x[0], x[1]), lambda F, x: F.mul(x[0], x[1])]))
    show("fn (x^2) F_5", fn_matrix(F5, 1, [lambda F, x: F.mul(x[0], x[0])]))
    show("gadget {x^2+x} F_3",
         gadget(F3, 1, [lambda F, x: F.add(F.mul(x[0], x[0]), x[0])]))
    show("gadget {x^2+1} F_3",
         gadget(F3, 1, [lambda F, x: F.add(F.mul(x[0], x[0]), F.one())]))
    show("gadget {x1+x2} F_2",
         gadget(F2, 2, [lambda F, x: F.add(x[0], x[1])]))

    # add;add' composite with an interior sum: entry counts interior points.
    show("add;add' F_2", matmul(gen(F2, "add"), dag(gen(F2, "add"))))
    show("del;del' F_3", matmul(gen(F3, "del"), dag(gen(F3, "del"))))


if __name__ == "__main__":
    main()
