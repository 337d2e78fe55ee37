"""Exact subspaces of Q^n stored as integer row-echelon bases."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def primitive(vec: Sequence) -> list[int] | None:
    """Scale a rational vector to a primitive integer vector with positive leading entry.

    Returns None for the zero vector.
    """
    den = 1
    for x in vec:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    lead = 0
    for x in ints:
        if x:
            g = gcd(g, x)
            if not lead:
                lead = x
    if not g:
        return None
    if lead < 0:
        g = -g
    return [x // g for x in ints]


class Echelon:
    """Span of integer vectors of a fixed length, kept in echelon form.

    Row i vanishes at the pivots of all rows inserted before it, so reducing a
    vector against the rows in insertion order clears every pivot.
    """

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        self.n = n
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return len(self.rows) == self.n

    def reduce(self, vec: Sequence) -> list[int] | None:
        v = primitive(vec)
        if v is None:
            return None
        if len(v) != self.n:
            raise ValueError(f"vector of length {len(v)} in a space of dimension {self.n}")
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                r = row[p]
                v = primitive([r * x - c * y for x, y in zip(v, row)])
                if v is None:
                    return None
        return v

    def add(self, vec: Sequence) -> list[int] | None:
        """Insert ``vec``; returns the new echelon row, or None if already in the span."""
        v = self.reduce(vec)
        if v is None:
            return None
        p = next(i for i, x in enumerate(v) if x)
        self.rows.append(v)
        self.pivots.append(p)
        return v

    def contains(self, vec: Sequence) -> bool:
        return self.reduce(vec) is None

    def copy(self) -> Echelon:
        out = Echelon(self.n)
        out.rows = [list(r) for r in self.rows]
        out.pivots = list(self.pivots)
        return out
