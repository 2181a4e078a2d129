"""Slow, independent reference arithmetic for the linearly ordered shipped groups.

Heisenberg elements are multiplied as 3x3 unitriangular integer matrices;
orders are Python tuple comparison, which is lexicographic.
"""
from __future__ import annotations

from itertools import product


def heis_matrix(x):
    a, b, c = x
    return [[1, a, c], [0, 1, b], [0, 0, 1]]


def matmul(p, q):
    return [[sum(p[i][k] * q[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def heis_add(x, y):
    m = matmul(heis_matrix(x), heis_matrix(y))
    return (m[0][1], m[1][2], m[0][2])


def heis_neg(x):
    # inverse of [[1,a,c],[0,1,b],[0,0,1]] is [[1,-a,ab-c],[0,1,-b],[0,0,1]]
    a, b, c = x
    return (-a, -b, a * b - c)


class LinearOracle:
    """A linearly ordered group given by blocks: 'Z' (one coordinate) or 'H' (Heisenberg)."""

    def __init__(self, blocks: str):
        self.blocks = blocks
        self.dim = sum(3 if b == "H" else 1 for b in blocks)

    def _split(self, x):
        out, i = [], 0
        for b in self.blocks:
            k = 3 if b == "H" else 1
            out.append(tuple(x[i:i + k]))
            i += k
        return out

    def add(self, x, y):
        out = ()
        for b, p, q in zip(self.blocks, self._split(x), self._split(y)):
            out += heis_add(p, q) if b == "H" else (p[0] + q[0],)
        return out

    def neg(self, x):
        out = ()
        for b, p in zip(self.blocks, self._split(x)):
            out += heis_neg(p) if b == "H" else (-p[0],)
        return out

    def le(self, x, y):
        return tuple(x) <= tuple(y)


class GammaOracle:
    def __init__(self, group: LinearOracle, unit):
        self.g, self.u = group, tuple(unit)
        self.zero = (0,) * group.dim

    def oplus(self, x, y):
        return min(self.g.add(x, y), self.u)

    def odot(self, x, y):
        return max(self.g.add(self.g.add(x, self.g.neg(self.u)), y), self.zero)

    def lneg(self, x):
        return self.g.add(self.u, self.g.neg(x))

    def rneg(self, x):
        return self.g.add(self.g.neg(x), self.u)

    def members(self, bound):
        for x in product(range(-bound, bound + 1), repeat=self.g.dim):
            if self.zero <= x <= self.u:
                yield x
