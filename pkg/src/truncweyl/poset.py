"""The poset of N-tuples of dominant weights with a fixed sum.

Tuples are compared through their r-profiles: for every positive root alpha
and 1 <= k <= N, the smallest value of (lambda_{i_1} + ... + lambda_{i_k})(h_alpha)
over k-subsets.  That minimum is the sum of the k smallest values
lambda_j(h_alpha), so a profile costs one sort per root.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .charring import DominantWeight
from .rootsys import Root, RootSystem

__all__ = [
    "DEFAULT_BOUND",
    "EnumerationBoundError",
    "Orbit",
    "Order",
    "WeightTuple",
    "count_tuples",
    "enumerate_tuples",
    "is_maximal_fundamental_multiple",
    "maximal_elements",
    "poset_compare",
    "poset_leq",
    "r_alpha_k",
    "r_profile",
]

DEFAULT_BOUND = 10**5


class EnumerationBoundError(RuntimeError):
    def __init__(self, count: int, bound: int):
        super().__init__(f"P+(lambda, N) has {count} tuples, above the bound {bound}")
        self.count = count
        self.bound = bound


class Order(enum.Enum):
    LEQ = "less-or-equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal-class"


class WeightTuple(tuple):
    """An ordered N-tuple of dominant weights."""

    def __new__(cls, entries: Sequence):
        return super().__new__(cls, (DominantWeight(e) for e in entries))

    @property
    def total(self) -> DominantWeight:
        return DominantWeight(map(sum, zip(*self)))

    def sorted_rep(self) -> WeightTuple:
        return WeightTuple(sorted(self, reverse=True))


@dataclass(frozen=True)
class Orbit:
    representative: WeightTuple
    size: int

    @classmethod
    def of(cls, tup: WeightTuple) -> Orbit:
        counts = Counter(tup).values()
        return cls(tup.sorted_rep(), factorial(len(tup)) // prod(factorial(c) for c in counts))


def count_tuples(lam: Sequence[int], n: int) -> int:
    return prod(comb(c + n - 1, n - 1) for c in lam)


def _compositions(total: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


def enumerate_tuples(rs: RootSystem, lam, n: int, bound: int = DEFAULT_BOUND) -> Iterator[WeightTuple]:
    """Every element of P+(lambda, n) once, lexicographic in the flattened coordinates."""
    lam = DominantWeight(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {tuple(lam)} has wrong length for {rs.name}")
    if n < 1:
        raise ValueError("n must be positive")
    count = count_tuples(lam, n)
    if count > bound:
        raise EnumerationBoundError(count, bound)

    def rec(remaining: tuple[int, ...], slots: int):
        if slots == 1:
            yield (remaining,)
            return
        for first in itertools.product(*(range(c + 1) for c in remaining)):
            rest = tuple(r - f for r, f in zip(remaining, first))
            for tail in rec(rest, slots - 1):
                yield (first,) + tail

    for tup in rec(tuple(lam), n):
        yield WeightTuple(tup)


def _check_k(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")


def r_alpha_k(rs: RootSystem, tup: Sequence, alpha: Root, k: int) -> int:
    _check_k(k, len(tup))
    vals = sorted(rs.eval_on_coroot(w, alpha) for w in tup)
    return sum(vals[:k])


def r_profile(rs: RootSystem, tup: Sequence) -> tuple[int, ...]:
    """All r_{alpha,k} values, roots in system order, k = 1..N."""
    out = []
    for alpha in rs.positive_roots:
        vals = sorted(rs.eval_on_coroot(w, alpha) for w in tup)
        out.extend(itertools.accumulate(vals))
    return tuple(out)


def poset_compare(rs: RootSystem, a: Sequence, b: Sequence) -> Order:
    a, b = WeightTuple(a), WeightTuple(b)
    if len(a) != len(b) or a.total != b.total:
        raise ValueError("tuples do not lie in the same P+(lambda, N)")
    pa, pb = r_profile(rs, a), r_profile(rs, b)
    if pa == pb:
        return Order.EQUAL
    if all(x <= y for x, y in zip(pa, pb)):
        return Order.LEQ
    if all(x >= y for x, y in zip(pa, pb)):
        return Order.GREATER
    return Order.INCOMPARABLE


poset_leq = poset_compare


def maximal_elements(rs: RootSystem, lam, n: int, bound: int = DEFAULT_BOUND) -> list[Orbit]:
    """Maximal elements of P+(lambda, n) grouped into S_n-orbits.

    A tuple is maximal when no tuple has a componentwise larger r-profile.
    """
    reps = {t.sorted_rep() for t in enumerate_tuples(rs, lam, n, bound)}
    profiles: dict[tuple[int, ...], list[WeightTuple]] = {}
    for rep in reps:
        profiles.setdefault(r_profile(rs, rep), []).append(rep)
    keys = list(profiles)
    top = [
        p for p in keys
        if not any(q != p and all(x <= y for x, y in zip(p, q)) for q in keys)
    ]
    orbits = [Orbit.of(rep) for p in top for rep in profiles[p]]
    return sorted(orbits, key=lambda o: o.representative, reverse=True)


def is_maximal_fundamental_multiple(m: int, n: int, entries: Sequence[int]) -> bool:
    """Maximality test in P+(m omega_i, n) from the omega_i-coefficients alone."""
    entries = list(entries)
    if len(entries) != n:
        raise ValueError(f"expected {n} entries, got {len(entries)}")
    if any(e < 0 for e in entries) or sum(entries) != m:
        raise ValueError(f"entries {entries} are not a composition of {m}")
    return max(entries) - min(entries) <= 1
