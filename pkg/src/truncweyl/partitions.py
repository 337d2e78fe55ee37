"""Partitions and the partition families attached to truncated Weyl,
Demazure and CV modules.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterable, Iterator

from .rootsys import Root, RootSystem

__all__ = [
    "Partition",
    "dominates",
    "is_demazure_shape",
    "partitions_of",
    "xi_ab",
    "xi_demazure",
    "xi_demazure_family",
    "xi_family",
    "xi_minus",
    "xi_parts",
    "xi_plus",
    "xi_star",
]


class Partition(tuple):
    """Non-increasing tuple of positive integers; ``Partition()`` is the zero partition.

    Zero parts passed to the constructor are dropped, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Parts must already be non-increasing.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        parts = tuple(p for p in parts if p)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not non-increasing")
        return super().__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> Partition:
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        out = []
        for k, grp in groupby(self):
            a = len(list(grp))
            out.append(str(k) if a == 1 else f"{k}^({a})")
        return "(" + ",".join(out) + ")"


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def dominates(a: Partition, b: Partition) -> bool:
    """True if every prefix sum of ``a`` is >= that of ``b`` (same total)."""
    if a.size != b.size:
        return False
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def xi_parts(a: int, n: int | None = None, *, infinite: bool = False) -> Partition:
    """((q+1)^(p), q^(n-p)) where a = n q + p, 0 <= p < n.

    With ``infinite=True`` the bound is dropped and the result is (1^(a)).
    """
    if a < 0:
        raise ValueError("a must be non-negative")
    if infinite:
        return Partition((1,) * a)
    if n is None or n <= 0:
        raise ValueError(f"truncation bound must be positive, got {n}")
    q, p = divmod(a, n)
    return Partition((q + 1,) * p + (q,) * (n - p))


def xi_family(rs: RootSystem, lam, n: int | None = None, *, infinite: bool = False) -> dict[Root, Partition]:
    """alpha -> xi_parts(lambda(h_alpha), n) over all positive roots."""
    return {
        alpha: xi_parts(rs.eval_on_coroot(lam, alpha), n, infinite=infinite)
        for alpha in rs.positive_roots
    }


def xi_demazure(level: int, a: int, lacing: int = 1) -> Partition:
    """((level*lacing)^(s-1), m) with a = (s-1) level lacing + m, 0 < m <= level lacing."""
    if level <= 0:
        raise ValueError(f"level must be positive, got {level}")
    if a < 0:
        raise ValueError("a must be non-negative")
    if a == 0:
        return Partition()
    big = level * lacing
    s1, m = divmod(a - 1, big)
    return Partition((big,) * s1 + (m + 1,))


def xi_demazure_family(rs: RootSystem, level: int, lam) -> dict[Root, Partition]:
    return {
        alpha: xi_demazure(level, rs.eval_on_coroot(lam, alpha), rs.lacing_exponent(alpha))
        for alpha in rs.positive_roots
    }


def xi_ab(a: int, b: int, level: int) -> Partition:
    """((level+1)^(a), level^(b))."""
    return Partition((level + 1,) * a + (level,) * b)


def _need_two(xi: Partition) -> None:
    if len(xi) < 2:
        raise ValueError(f"{xi} has fewer than two parts")


def xi_plus(xi: Partition) -> Partition:
    _need_two(xi)
    xi = Partition(xi)
    body = list(xi[:-2]) + [xi[-2] + 1, xi[-1] - 1]
    return Partition.sorted(body)


def xi_minus(xi: Partition) -> Partition:
    _need_two(xi)
    xi = Partition(xi)
    return Partition(xi[:-2] + (xi[-2] - xi[-1],))


def xi_star(xi: Partition) -> Partition:
    """Drop the largest part."""
    if not xi:
        raise ValueError("the empty partition has no largest part")
    return Partition(tuple(xi)[1:])


def is_demazure_shape(xi: Partition, level: int) -> bool:
    """All parts equal ``level`` except possibly a smaller last one."""
    if level <= 0:
        raise ValueError(f"level must be positive, got {level}")
    xi = Partition(xi)
    return xi == xi_demazure(level, xi.size)
