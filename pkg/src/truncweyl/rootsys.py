"""Finite-type root systems built by closure from a Cartan matrix.

Nodes are numbered as in Bourbaki (so in B2 the simple root ``alpha_2`` is
short, in C_n the last node is long, in G2 ``alpha_1`` is short).  Indices
handed to the public API are 1-based to match that numbering.

The Cartan matrix is stored as ``c[i][j] = alpha_j(h_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

__all__ = [
    "InvalidTypeError",
    "Root",
    "RootSystem",
    "build_root_system",
    "cartan_matrix",
]


class InvalidTypeError(ValueError):
    """Raised for a (series, rank) pair that is not a finite Cartan type."""


def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix of a finite type, Bourbaki numbering, 0-based rows."""
    s = series.upper()
    n = rank
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 3,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if s not in valid or not valid[s]:
        raise InvalidTypeError(f"unsupported Cartan type {series}{rank}")
    if s == "A":
        return _chain(n)
    if s == "B":
        c = _chain(n)
        c[n - 1][n - 2] = -2
        return c
    if s == "C":
        c = _chain(n)
        c[n - 2][n - 1] = -2
        return c
    if s == "D":
        c = _chain(n)
        # node n hangs off n-2 instead of n-1
        c[n - 1][n - 2] = c[n - 2][n - 1] = 0
        c[n - 1][n - 3] = c[n - 3][n - 1] = -1
        return c
    if s == "E":
        c = [[0] * n for _ in range(n)]
        edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]
        for i in range(n):
            c[i][i] = 2
        for i, j in edges:
            c[i - 1][j - 1] = c[j - 1][i - 1] = -1
        return c
    if s == "F":
        c = _chain(4)
        c[2][1] = -2
        return c
    # G2, alpha_1 short
    return [[2, -3], [-1, 2]]


def _symmetrizer(c: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Coprime positive d_i with diag(d) * C symmetric."""
    n = len(c)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and c[i][j] != 0 and d[j] is None:
                # d_i c_ij = d_j c_ji
                d[j] = d[i] * c[i][j] / c[j][i]
                stack.append(j)
    assert all(x is not None for x in d), "Cartan matrix is not connected"
    den = lcm(*(x.denominator for x in d))
    ints = [int(x * den) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True, order=True)
class Root:
    """A positive root written in simple-root coordinates."""

    coords: tuple[int, ...]
    is_long: bool = field(default=True, compare=False)

    def ht_i(self, i: int) -> int:
        """Coefficient of the i-th simple root (1-based)."""
        if not 1 <= i <= len(self.coords):
            raise IndexError(f"node index {i} out of range 1..{len(self.coords)}")
        return self.coords[i - 1]

    @property
    def ht(self) -> int:
        return sum(self.coords)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coords, 1):
            if a:
                terms.append(f"a{i}" if a == 1 else f"{a}a{i}")
        return "+".join(terms)


@dataclass(frozen=True, eq=False)
class RootSystem:
    series: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    # coroot_eval[r][i] = omega_{i+1}(h_{alpha}) for alpha = positive_roots[r]
    coroot_eval: tuple[tuple[int, ...], ...]
    _lookup: dict = field(init=False, repr=False, compare=False)
    _columns: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", {r.coords: k for k, r in enumerate(self.positive_roots)})
        cols = tuple(tuple(row[i] for row in self.cartan_matrix) for i in range(self.rank))
        object.__setattr__(self, "_columns", cols)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    @property
    def simply_laced(self) -> bool:
        return len(set(self.symmetrizer)) == 1

    @property
    def lacing_number(self) -> int:
        return max(self.symmetrizer) // min(self.symmetrizer)

    def simple_root(self, i: int) -> Root:
        return self.positive_roots[self.index(tuple(int(j == i - 1) for j in range(self.rank)))]

    def index(self, root: Root | tuple[int, ...]) -> int:
        coords = root.coords if isinstance(root, Root) else tuple(root)
        try:
            return self._lookup[coords]
        except KeyError:
            raise ValueError(f"{coords} is not a positive root of {self.name}") from None

    def root_norm(self, coords: Sequence[int]) -> int:
        """(beta, beta) with (alpha_i, alpha_i) = 2 d_i."""
        c, d, n = self.cartan_matrix, self.symmetrizer, self.rank
        return sum(coords[i] * coords[j] * d[i] * c[i][j] for i in range(n) for j in range(n))

    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda r: (r.ht, r.coords))

    def highest_short_root(self) -> Root:
        if self.simply_laced:
            return self.highest_root()
        short = [r for r in self.positive_roots if not r.is_long]
        return max(short, key=lambda r: (r.ht, r.coords))

    def eval_on_coroot(self, weight: Sequence[int], root: Root) -> int:
        """lambda(h_alpha) for lambda given in fundamental-weight coordinates."""
        if len(weight) != self.rank:
            raise ValueError(f"weight has {len(weight)} coordinates, expected {self.rank}")
        row = self.coroot_eval[self.index(root)]
        return sum(w * e for w, e in zip(weight, row))

    def lacing_exponent(self, root: Root) -> int:
        """1 on long roots, the lacing number on short ones."""
        self.index(root)
        return 1 if root.is_long else self.lacing_number

    def small_nodes(self) -> list[int]:
        """Nodes i with ht_i(theta) = 1."""
        theta = self.highest_root()
        return [i for i in range(1, self.rank + 1) if theta.ht_i(i) == 1]

    def simple_root_weight(self, i: int) -> tuple[int, ...]:
        """alpha_i expressed in fundamental-weight coordinates (column i of C)."""
        return self._columns[i - 1]

    def root_weight(self, root: Root | Sequence[int]) -> tuple[int, ...]:
        coords = root.coords if isinstance(root, Root) else root
        c = self.cartan_matrix
        return tuple(sum(c[k][j] * coords[j] for j in range(self.rank)) for k in range(self.rank))


def _positive_roots(c: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    n = len(c)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta - p a_i, ..., beta + q a_i, p - q = beta(h_i)
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * c[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    """Root data for a finite type; raises :class:`InvalidTypeError` otherwise."""
    series = series.upper()
    c = cartan_matrix(series, rank)
    d = _symmetrizer(c)
    coords = _positive_roots(c)
    tmp = RootSystem(series, rank, tuple(map(tuple, c)), d, (), ())
    norms = [tmp.root_norm(r) for r in coords]
    long_norm = max(norms)
    roots = tuple(Root(r, n == long_norm) for r, n in zip(coords, norms))
    table = []
    for r, nrm in zip(coords, norms):
        # h_beta = sum_j b_j (d_j / d_beta) h_j with d_beta = (beta, beta) / 2
        d_beta = nrm // 2
        row = []
        for i in range(rank):
            val, rem = divmod(r[i] * d[i], d_beta)
            assert rem == 0
            row.append(val)
        table.append(tuple(row))
    return RootSystem(series, rank, tmp.cartan_matrix, d, roots, tuple(table))
