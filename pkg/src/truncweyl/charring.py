"""Characters of finite-dimensional g-modules.

Weights are integer tuples in the fundamental-weight basis.  Everything is
exact: integer and :class:`fractions.Fraction` arithmetic only.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .laurent import LaurentPoly
from .rootsys import RootSystem, build_root_system

__all__ = [
    "DominantWeight",
    "FormalCharacter",
    "GradedCharacter",
    "dominant_multiplicities",
    "graded_dim_series",
    "irreducible_character",
    "tensor_decompose",
    "total_dim",
    "weyl_dim",
]

SL2 = build_root_system("A", 1)


class DominantWeight(tuple):
    """Non-negative coordinates on the fundamental weights."""

    def __new__(cls, coords: Iterable[int] | int):
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(int(c) for c in coords)
        if any(c < 0 for c in coords):
            raise ValueError(f"weight {coords} is not dominant")
        return super().__new__(cls, coords)

    @property
    def size(self) -> int:
        """|lambda|, the coordinate sum."""
        return sum(self)

    def __add__(self, other):
        return DominantWeight(a + b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"DominantWeight({tuple(self)})"


def _inverse_cartan(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    n = rs.rank
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rs.cartan_matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@lru_cache(maxsize=None)
def _form(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix (omega_i, omega_k) normalised by (alpha_i, alpha_i) = 2 d_i."""
    inv = _inverse_cartan(rs)
    d = rs.symmetrizer
    n = rs.rank
    return tuple(tuple(inv[k][i] * d[k] for k in range(n)) for i in range(n))


def _pair(rs: RootSystem, u: Sequence[int], v: Sequence[int]) -> Fraction:
    g = _form(rs)
    n = rs.rank
    return sum((u[i] * v[k] * g[i][k] for i in range(n) for k in range(n)), Fraction(0))


def _root_coords(rs: RootSystem, weight: Sequence[int]) -> tuple[Fraction, ...]:
    """Coordinates of ``weight`` on the simple roots."""
    inv = _inverse_cartan(rs)
    n = rs.rank
    return tuple(sum((inv[i][k] * weight[k] for k in range(n)), Fraction(0)) for i in range(n))


def _to_dominant(rs: RootSystem, weight: Sequence[int]) -> tuple[int, ...]:
    cols = rs._columns
    w = list(weight)
    while True:
        for i, c in enumerate(w):
            if c < 0:
                w = [x - c * a for x, a in zip(w, cols[i])]
                break
        else:
            return tuple(w)


def _check_weight(rs: RootSystem, lam) -> DominantWeight:
    lam = DominantWeight(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {tuple(lam)} has wrong length for {rs.name}")
    return lam


def weyl_dim(rs: RootSystem, lam) -> int:
    """dim V(lambda) from the Weyl dimension formula."""
    lam = _check_weight(rs, lam)
    num = den = 1
    for row in rs.coroot_eval:
        rho_h = sum(row)
        num *= rho_h + sum(a * b for a, b in zip(lam, row))
        den *= rho_h
    q, r = divmod(num, den)
    assert r == 0
    return q


@lru_cache(maxsize=4096)
def _dominant_mults(rs: RootSystem, lam: DominantWeight) -> tuple[tuple[tuple[int, ...], int], ...]:
    n = rs.rank
    d = rs.symmetrizer
    roots = [(rs.root_weight(r), r.coords) for r in rs.positive_roots]
    # (nu, alpha) = sum_j a_j d_j nu_j for alpha = sum_j a_j alpha_j
    pair_vec = [tuple(a * dj for a, dj in zip(coords, d)) for _, coords in roots]
    # dominant weights below lam, reached by subtracting positive roots; depth in root coords
    depth = {tuple(lam): (0,) * n}
    frontier = [tuple(lam)]
    while frontier:
        nxt = []
        for mu in frontier:
            dm = depth[mu]
            for aw, ac in roots:
                nu = tuple(x - y for x, y in zip(mu, aw))
                if min(nu) >= 0 and nu not in depth:
                    depth[nu] = tuple(x + y for x, y in zip(dm, ac))
                    nxt.append(nu)
        frontier = nxt
    order = sorted(depth, key=lambda mu: (sum(depth[mu]), mu))
    mult: dict[tuple[int, ...], int] = {}
    for mu in order:
        if mu == tuple(lam):
            mult[mu] = 1
            continue
        total = 0
        for (aw, _), pv in zip(roots, pair_vec):
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, aw))
                m = mult.get(_to_dominant(rs, nu), 0)
                if not m:
                    break
                total += m * sum(x * y for x, y in zip(nu, pv))
                k += 1
        # (lam + rho)^2 - (mu + rho)^2 = (lam - mu, lam + mu + 2 rho)
        gap = sum(nj * dj * (l + m_ + 2) for nj, dj, l, m_ in zip(depth[mu], d, lam, mu))
        val, rem = divmod(2 * total, gap)
        assert rem == 0 and val >= 0
        if val:
            mult[mu] = val
    return tuple(sorted(mult.items()))


def dominant_multiplicities(rs: RootSystem, lam) -> dict[DominantWeight, int]:
    """Freudenthal multiplicities of the dominant weights of V(lambda)."""
    lam = _check_weight(rs, lam)
    return {DominantWeight(mu): m for mu, m in _dominant_mults(rs, lam)}


def _orbit(rs: RootSystem, mu: tuple[int, ...]) -> set[tuple[int, ...]]:
    # walk down from the dominant weight: s_i only where the i-th coordinate is positive
    cols = rs._columns
    out = {mu}
    layer = [mu]
    while layer:
        nxt = []
        for w in layer:
            for i, c in enumerate(w):
                if c > 0:
                    v = tuple(x - c * a for x, a in zip(w, cols[i]))
                    if v not in out:
                        out.add(v)
                        nxt.append(v)
        layer = nxt
    return out


class FormalCharacter:
    """Weight -> multiplicity map of a finite-dimensional module."""

    def __init__(self, rs: RootSystem, entries: Mapping[tuple[int, ...], int]):
        self.rs = rs
        self.entries = {tuple(w): int(m) for w, m in entries.items() if m}

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, weight) -> int:
        return self.entries.get(tuple(weight), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.rs is other.rs and self.entries == other.entries

    def __mul__(self, other: FormalCharacter) -> FormalCharacter:
        out: Counter = Counter()
        for w1, m1 in self.entries.items():
            for w2, m2 in other.entries.items():
                out[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
        return FormalCharacter(self.rs, out)

    def dominant_part(self) -> dict[tuple[int, ...], int]:
        return {w: m for w, m in self.entries.items() if min(w) >= 0}

    def is_weyl_invariant(self) -> bool:
        for w, m in self.entries.items():
            for i in range(self.rs.rank):
                col = self.rs.simple_root_weight(i + 1)
                if self[tuple(x - w[i] * a for x, a in zip(w, col))] != m:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "weights": [{"weight": list(w), "mult": m} for w, m in sorted(self.entries.items(), reverse=True)],
        }


def irreducible_character(rs: RootSystem, lam) -> FormalCharacter:
    """Full weight multiplicities of V(lambda)."""
    entries = {}
    for mu, m in dominant_multiplicities(rs, lam).items():
        for w in _orbit(rs, tuple(mu)):
            entries[w] = m
    return FormalCharacter(rs, entries)


def tensor_decompose(rs: RootSystem, lam, mu) -> dict[DominantWeight, int]:
    """Irreducible constituents of V(lambda) (x) V(mu) with multiplicity.

    Peels off the highest remaining dominant weight, where "highest" is the
    lexicographic maximum of its simple-root coordinates; that order refines
    the dominance order, so the peeled weight is always a highest weight.
    """
    lam = _check_weight(rs, lam)
    mu = _check_weight(rs, mu)
    rest = Counter((irreducible_character(rs, lam) * irreducible_character(rs, mu)).dominant_part())
    out: dict[DominantWeight, int] = {}
    while rest:
        top = max(rest, key=lambda w: _root_coords(rs, w))
        c = rest[top]
        out[DominantWeight(top)] = c
        for w, m in dominant_multiplicities(rs, top).items():
            left = rest[tuple(w)] - c * m
            if left < 0:
                raise ArithmeticError(f"negative residual multiplicity at {tuple(w)}")
            if left:
                rest[tuple(w)] = left
            else:
                del rest[tuple(w)]
    return dict(sorted(out.items(), reverse=True))


class GradedCharacter:
    """Degree -> {dominant highest weight -> isotypic multiplicity}.

    The default root system is sl_2, where highest weights are 1-tuples.
    """

    def __init__(self, pieces: Mapping[int, Mapping] | None = None, rs: RootSystem = SL2):
        self.rs = rs
        clean: dict[int, dict[DominantWeight, int]] = {}
        for k, piece in (pieces or {}).items():
            if k < 0:
                raise ValueError(f"negative degree {k}")
            row = {}
            for w, m in piece.items():
                if m < 0:
                    raise ValueError("negative multiplicity in graded character")
                if m:
                    row[DominantWeight(w)] = int(m)
            if row:
                clean[int(k)] = row
        self._pieces = clean

    @classmethod
    def irreducible(cls, lam, degree: int = 0, rs: RootSystem = SL2) -> GradedCharacter:
        return cls({degree: {DominantWeight(lam): 1}}, rs)

    @property
    def pieces(self) -> dict[int, dict[DominantWeight, int]]:
        return {k: dict(v) for k, v in sorted(self._pieces.items())}

    def piece(self, k: int) -> dict[DominantWeight, int]:
        return dict(self._pieces.get(k, {}))

    @property
    def degrees(self) -> list[int]:
        return sorted(self._pieces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.rs is other.rs and self._pieces == other._pieces

    def __hash__(self) -> int:
        return hash(tuple((k, frozenset(v.items())) for k, v in sorted(self._pieces.items())))

    def __add__(self, other: GradedCharacter) -> GradedCharacter:
        out = {k: Counter(v) for k, v in self._pieces.items()}
        for k, v in other._pieces.items():
            out.setdefault(k, Counter()).update(v)
        return GradedCharacter(out, self.rs)

    def __sub__(self, other: GradedCharacter) -> GradedCharacter:
        """Difference; raises if the result would have negative entries."""
        out = {k: Counter(v) for k, v in self._pieces.items()}
        for k, v in other._pieces.items():
            row = out.setdefault(k, Counter())
            for w, m in v.items():
                row[w] -= m
        return GradedCharacter(out, self.rs)

    def __mul__(self, c: int) -> GradedCharacter:
        return GradedCharacter({k: {w: c * m for w, m in v.items()} for k, v in self._pieces.items()}, self.rs)

    __rmul__ = __mul__

    def shift(self, m: int) -> GradedCharacter:
        """tau_m: move degree k to k + m."""
        if m and self._pieces and min(self._pieces) + m < 0:
            raise ValueError("grade shift would produce negative degrees")
        return GradedCharacter({k + m: v for k, v in self._pieces.items()}, self.rs)

    def ungraded(self) -> dict[DominantWeight, int]:
        out: Counter = Counter()
        for v in self._pieces.values():
            out.update(v)
        return dict(sorted(out.items(), reverse=True))

    def __repr__(self) -> str:
        return f"GradedCharacter({self.pieces!r})"

    def format_piece(self, k: int) -> str:
        items = sorted(self._pieces.get(k, {}).items(), reverse=True)
        terms = []
        for w, m in items:
            name = f"V({w[0]})" if self.rs.rank == 1 else f"V({','.join(map(str, w))})"
            terms.append(name if m == 1 else f"{m}{name}")
        return " + ".join(terms) if terms else "0"

    def to_json(self, label: str | None = None) -> dict:
        def hw(w):
            return w[0] if self.rs.rank == 1 else list(w)

        out = {}
        if label is not None:
            out["module"] = label
        out["graded_pieces"] = [
            {
                "degree": k,
                "isotypic": [{"highest_weight": hw(w), "mult": m} for w, m in sorted(v.items(), reverse=True)],
            }
            for k, v in sorted(self._pieces.items())
        ]
        out["dim_series"] = graded_dim_series(self).to_json()
        return out

    @classmethod
    def from_json(cls, data: Mapping, rs: RootSystem = SL2) -> GradedCharacter:
        pieces: dict[int, dict] = {}
        for p in data["graded_pieces"]:
            row = pieces.setdefault(int(p["degree"]), {})
            for iso in p["isotypic"]:
                w = iso["highest_weight"]
                row[DominantWeight(w if isinstance(w, list) else [w])] = iso["mult"]
        return cls(pieces, rs)

    def items(self) -> Iterator[tuple[int, DominantWeight, int]]:
        for k, v in sorted(self._pieces.items()):
            for w, m in sorted(v.items(), reverse=True):
                yield k, w, m


def graded_dim_series(gc: GradedCharacter) -> LaurentPoly:
    """Sum over degrees k of dim(piece k) t^k."""
    return LaurentPoly({k: sum(m * weyl_dim(gc.rs, w) for w, m in v.items()) for k, v in gc.pieces.items()})


def total_dim(gc: GradedCharacter) -> int:
    return graded_dim_series(gc).at_one()
