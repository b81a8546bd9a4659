#!/usr/bin/env python3
"""Independent ZH-circuit oracle.

Evaluates ZH terms densely over Z[w] (w a primitive p-th root of unity) with
a global q^{k/2} factor, using direct sums over field indices — no diagram
translation, no Fourier merging.  Rows index outputs here, matching the
circuit convention.
"""

import itertools

from gf import GF


class Cyc:
    """Element of Z[x]/(1 + x + ... + x^{p-1}), coefficients of 1..w^{p-2}."""

    def __init__(self, p, c=None):
        self.p = p
        self.c = [0] * (p - 1) if c is None else list(c)

    @staticmethod
    def integer(p, n):
        z = Cyc(p)
        z.c[0] = n
        return z

    @staticmethod
    def root(p, e):
        e %= p
        z = Cyc(p)
        if e < p - 1:
            z.c[e] = 1
        else:
            z.c = [-1] * (p - 1)
        return z

    def __add__(self, o):
        return Cyc(self.p, [a + b for a, b in zip(self.c, o.c)])

    def __mul__(self, o):
        full = [0] * (2 * self.p - 3)
        for i, a in enumerate(self.c):
            for j, b in enumerate(o.c):
                full[i + j] += a * b
        z = Cyc(self.p)
        for d, v in enumerate(full):
            if v == 0:
                continue
            r = Cyc.root(self.p, d)
            z = z + Cyc(self.p, [v * x for x in r.c])
        return z

    def scaled(self, n):
        return Cyc(self.p, [n * x for x in self.c])

    def key(self):
        return tuple(self.c)


def mat(p, rows, cols, fill):
    return [[fill(r, c) for c in range(cols)] for r in range(rows)]


def matmul(p, A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Cyc(p))
             for j in range(len(B[0]))] for i in range(len(A))]


def kron(p, A, B):
    ra, ca, rb, cb = len(A), len(A[0]), len(B), len(B[0])
    out = [[Cyc(p) for _ in range(ca * cb)] for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = A[i][j] * B[k][l]
    return out


def digits(F, idx, n):
    ds = []
    for _ in range(n):
        ds.append(idx % F.q)
        idx //= F.q
    return list(reversed(ds))  # leftmost wire most significant


class M:
    """ScaledCycMatrix: q^{k/2} * entries."""

    def __init__(self, k, entries):
        self.k = k
        self.e = entries


def z_spider(F, n, m):
    p = F.p

    def fill(r, c):
        ds = digits(F, r, m) + digits(F, c, n)
        if not ds:
            return Cyc.integer(p, F.q)
        return Cyc.integer(p, 1 if len(set(ds)) == 1 else 0)

    return M(0, mat(p, F.q ** m, F.q ** n, fill))


def h_box(F, n, m):
    p = F.p

    def fill(r, c):
        prod = F.one()
        for d in digits(F, r, m) + digits(F, c, n):
            prod = F.mul(prod, F.from_index(d))
        return Cyc.root(p, F.trace_int(prod))

    return M(-1, mat(p, F.q ** m, F.q ** n, fill))


def xstate(F, j):
    p = F.p
    return M(1, mat(p, F.q, 1, lambda r, c: Cyc.integer(p, 1 if r == F.index(j) else 0)))


def comp(F, a, b):  # a then b
    return M(a.k + b.k, matmul(F.p, b.e, a.e))


def tens(F, a, b):
    return M(a.k + b.k, kron(F.p, a.e, b.e))


def dag(F, a):
    conj = [[Cyc(F.p) for _ in range(len(a.e))] for _ in range(len(a.e[0]))]
    for i, row in enumerate(a.e):
        for j, v in enumerate(row):
            w = Cyc(F.p)
            for d, x in enumerate(v.c):
                if x:
                    r = Cyc.root(F.p, (d * (F.p - 1)) % F.p)
                    w = w + Cyc(F.p, [x * y for y in r.c])
            conj[j][i] = w
    return M(a.k, conj)


def show(label, m):
    print(f"{label}: k={m.k} " + str([[v.c for v in row] for row in m.e]))


def main():
    F2, F3, F4 = GF(2), GF(3), GF(2, 2)

    show("H(1,1) F_2", h_box(F2, 1, 1))
    show("H(1,1) F_3", h_box(F3, 1, 1))
    show("H(1,1) F_4", h_box(F4, 1, 1))
    show("H(2,1) F_2", h_box(F2, 2, 1))
    show("Z(2,1) F_3", z_spider(F3, 2, 1))
    show("Z(0,0) F_3", z_spider(F3, 0, 0))
    show("H(1,1);H(1,1) F_2", comp(F2, h_box(F2, 1, 1), h_box(F2, 1, 1)))

    show("H(0,1);xstate(0)' F_2", comp(F2, h_box(F2, 0, 1), dag(F2, xstate(F2, F2.zero()))))
    show("H(0,1);xstate(0)' F_3", comp(F3, h_box(F3, 0, 1), dag(F3, xstate(F3, F3.zero()))))
    show("xstate(1);H(1,1);xstate(0)' F_3",
         comp(F3, comp(F3, xstate(F3, F3.one()), h_box(F3, 1, 1)), dag(F3, xstate(F3, F3.zero()))))
    show("xstate(a);H(1,1);xstate(a)' F_4",
         comp(F4, comp(F4, xstate(F4, F4.from_index(2)), h_box(F4, 1, 1)),
              dag(F4, xstate(F4, F4.from_index(2)))))
    show("(Z(0,1)*Z(0,1));H(2,0)' ... via H(2,1);Z(1,0): closed F_2",
         comp(F2, comp(F2, tens(F2, z_spider(F2, 0, 1), z_spider(F2, 0, 1)), h_box(F2, 2, 1)),
              z_spider(F2, 1, 0)))
    show("H(0,0) F_2", h_box(F2, 0, 0))
    show("H(0,0) F_3", h_box(F3, 0, 0))
    show("H(0,0) F_4", h_box(F4, 0, 0))


if __name__ == "__main__":
    main()
