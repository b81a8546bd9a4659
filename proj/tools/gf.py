"""Tiny exact GF(p^t) arithmetic shared by the oracle scripts.

Elements are tuples of length t with entries mod p (power-basis coefficients,
low degree first).  The moduli mirror the library's built-in table so element
indices and traces agree across routes.
"""

MODULI = {
    (2, 1): (1,),
    (3, 1): (1,),
    (5, 1): (1,),
    (7, 1): (1,),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}


class GF:
    def __init__(self, p, t=1):
        self.p, self.t = p, t
        self.q = p ** t
        self.mod = MODULI[(p, t)]

    def zero(self):
        return (0,) * self.t

    def one(self):
        return (1,) + (0,) * (self.t - 1)

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.t - 1)

    def from_index(self, i):
        c = []
        for _ in range(self.t):
            c.append(i % self.p)
            i //= self.p
        return tuple(c)

    def index(self, x):
        i = 0
        for c in reversed(x):
            i = i * self.p + c
        return i

    def elements(self):
        return [self.from_index(i) for i in range(self.q)]

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple((-a) % self.p for a in x)

    def mul(self, x, y):
        prod = [0] * (2 * self.t - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                prod[i + j] = (prod[i + j] + a * b) % self.p
        for d in range(len(prod) - 1, self.t - 1, -1):
            lead = prod[d]
            if lead:
                prod[d] = 0
                for i in range(self.t):
                    prod[d - self.t + i] = (prod[d - self.t + i] - lead * self.mod[i]) % self.p
        return tuple(prod[: self.t])

    def pow(self, x, e):
        r = self.one()
        for _ in range(e):
            r = self.mul(r, x)
        return r

    def trace_int(self, x):
        s = self.zero()
        y = x
        for _ in range(self.t):
            s = self.add(s, y)
            y = self.pow(y, self.p)
        assert all(c == 0 for c in s[1:])
        return s[0]
