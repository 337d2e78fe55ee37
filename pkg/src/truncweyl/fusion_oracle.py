"""Brute-force sl_2 fusion products.

A tensor product of evaluation modules V_{a_1}(m_1) x ... x V_{a_l}(m_l) is
built explicitly, filtered by t-degree starting from the tensor product of
highest-weight vectors, and the graded pieces of the associated graded
module are decomposed into sl_2 isotypics from weight-space dimensions.

Basis vectors are multi-indices (i_1, ..., i_l) with 0 <= i_j <= m_j, where
i_j counts applications of f in the j-th factor.  On V(m):

    f v_i = v_{i+1},   e v_i = i (m - i + 1) v_{i-1},   h v_i = (m - 2i) v_i

and x (x) t^k acts on the j-th factor as a_j^k x (with 0^0 = 1).  Every
operator involved maps the span of multi-indices with a fixed total
s = i_1 + ... + i_l (a weight space) into the span with total s - 1, s or
s + 1, so subspaces are stored one weight space at a time.
"""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm, prod
from typing import Iterable, Sequence

from .charring import GradedCharacter
from .linalg import Echelon
from .partitions import Partition

__all__ = [
    "FusionResult",
    "FusionWarning",
    "MatrixModule",
    "annihilates_in_gr",
    "evaluation_module",
    "fusion_filtration",
    "fusion_graded_char",
    "parameter_independence_check",
    "tensor_with_parameters",
]

GENERATORS = ("e", "f", "h")
_BRACKET = {("e", "f"): ("h", 1), ("h", "e"): ("e", 2), ("h", "f"): ("f", -2)}


class FusionWarning(UserWarning):
    """Evaluation parameters are not pairwise distinct."""


def _power(a, k: int):
    return 1 if k == 0 else a**k


class MatrixModule:
    """A tensor product of sl_2 evaluation modules with its g[t]-action."""

    def __init__(self, factors: Sequence[tuple[int, object]]):
        factors = [(int(m), Fraction(a)) for m, a in factors]
        if any(m < 0 for m, _ in factors):
            raise ValueError("highest weights must be non-negative")
        self.factors = tuple(factors)
        self.highest = tuple(m for m, _ in factors)
        self.params = tuple(a for _, a in factors)
        self.parameters_distinct = len(set(self.params)) == len(self.params)
        self.dim = prod(m + 1 for m in self.highest)
        top = sum(self.highest)
        # weight spaces indexed by s = number of f's, weight top - 2s
        self.spaces: list[list[tuple[int, ...]]] = [[] for _ in range(top + 1)]
        for idx in itertools.product(*(range(m + 1) for m in self.highest)):
            self.spaces[sum(idx)].append(idx)
        self.position = [{b: i for i, b in enumerate(sp)} for sp in self.spaces]
        self.basis = [b for sp in self.spaces for b in sp]
        self.weight_of_basis = [top - 2 * sum(b) for b in self.basis]
        self.cyclic_vector = [1] + [0] * (self.dim - 1)

    def __repr__(self) -> str:
        return f"MatrixModule({list(self.factors)!r})"

    # -- action on vectors stored per weight space

    def _coeffs(self, k: int) -> list:
        return [_power(a, k) for a in self.params]

    def apply_block(self, gen: str, k: int, s: int, vec: Sequence) -> tuple[int, list] | None:
        """Act by gen (x) t^k on a vector of weight space s.

        Returns (target space, coordinates), or None when the target is empty.
        """
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        if k < 0:
            raise ValueError("powers of t must be non-negative")
        ds = {"e": -1, "f": 1, "h": 0}[gen]
        target = s + ds
        if not 0 <= target < len(self.spaces):
            return None
        cs = self._coeffs(k)
        pos = self.position[target]
        out = [0] * len(self.spaces[target])
        for b, x in zip(self.spaces[s], vec):
            if not x:
                continue
            for j, (m, c) in enumerate(zip(self.highest, cs)):
                if not c:
                    continue
                i = b[j]
                if gen == "h":
                    out[pos[b]] += c * (m - 2 * i) * x
                elif gen == "f":
                    if i < m:
                        nb = b[:j] + (i + 1,) + b[j + 1 :]
                        out[pos[nb]] += c * x
                elif i > 0:
                    nb = b[:j] + (i - 1,) + b[j + 1 :]
                    out[pos[nb]] += c * i * (m - i + 1) * x
        return target, out

    def _split(self, vec: Sequence) -> list[list]:
        out, start = [], 0
        for sp in self.spaces:
            out.append(list(vec[start : start + len(sp)]))
            start += len(sp)
        return out

    def apply(self, gen: str, k: int, vec: Sequence) -> list:
        """Act by gen (x) t^k on a vector in the full basis."""
        res = [0] * self.dim
        offsets = list(itertools.accumulate([0] + [len(sp) for sp in self.spaces]))
        for s, block in enumerate(self._split(vec)):
            if not any(block):
                continue
            hit = self.apply_block(gen, k, s, block)
            if hit is None:
                continue
            t, out = hit
            for i, x in enumerate(out):
                res[offsets[t] + i] += x
        return res

    def action(self, gen: str, k: int) -> list[list]:
        """Dense matrix of gen (x) t^k; column j is the image of basis vector j."""
        cols = []
        for j in range(self.dim):
            unit = [0] * self.dim
            unit[j] = 1
            cols.append(self.apply(gen, k, unit))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    # -- structural checks

    def check_commutation(self, max_power: int = 2, samples: int = 8, seed: int = 0) -> bool:
        """[x t^a, y t^b] = [x, y] t^(a+b) on a sample of basis vectors."""
        rng = random.Random(seed)
        picks = rng.sample(range(self.dim), min(samples, self.dim))
        for (x, y), (z, c) in _BRACKET.items():
            for a in range(max_power + 1):
                for b in range(max_power + 1):
                    for j in picks:
                        v = [0] * self.dim
                        v[j] = 1
                        lhs = [p - q for p, q in zip(
                            self.apply(x, a, self.apply(y, b, v)),
                            self.apply(y, b, self.apply(x, a, v)),
                        )]
                        rhs = [c * w for w in self.apply(z, a + b, v)]
                        if lhs != rhs:
                            return False
        return True

    def h_is_diagonal(self) -> bool:
        for j, w in enumerate(self.weight_of_basis):
            unit = [0] * self.dim
            unit[j] = 1
            image = self.apply("h", 0, unit)
            if any(x for i, x in enumerate(image) if i != j) or image[j] != w:
                return False
        return True

    @cached_property
    def _distinct_count(self) -> int:
        return len(set(self.params))

    def cyclic_span_dim(self) -> int:
        """dim U(g[t]) v, using t-powers below the number of distinct parameters."""
        spaces = _Filtration(self)
        spaces.insert(0, [1])
        spaces.close(range(self._distinct_count))
        return spaces.dim

    def is_cyclic(self) -> bool:
        return self.cyclic_span_dim() == self.dim


def evaluation_module(m: int, a) -> MatrixModule:
    """V_a(m): sl_2 irreducible of highest weight m with t acting as a."""
    return MatrixModule([(m, a)])


def tensor_with_parameters(factors: Iterable[tuple[int, object]]) -> MatrixModule:
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    mod = MatrixModule(factors)
    if not mod.parameters_distinct:
        warnings.warn(f"parameters {mod.params} are not pairwise distinct", FusionWarning, stacklevel=2)
    return mod


class _Filtration:
    """Per-weight-space subspaces plus the vectors added in the current step."""

    def __init__(self, mod: MatrixModule):
        self.mod = mod
        self.spaces = [Echelon(len(sp)) for sp in mod.spaces]
        self.fresh: list[tuple[int, list[int]]] = []

    @property
    def dim(self) -> int:
        return sum(e.dim for e in self.spaces)

    def dims(self) -> list[int]:
        return [e.dim for e in self.spaces]

    def insert(self, s: int, vec) -> None:
        row = self.spaces[s].add(vec)
        if row is not None:
            self.fresh.append((s, row))

    def close(self, powers: Iterable[int]) -> None:
        """Saturate under x (x) t^k for k in ``powers``, x in {e, f, h}."""
        powers = list(powers)
        queue = list(self.fresh)
        while queue:
            s, vec = queue.pop()
            for k in powers:
                for gen in GENERATORS:
                    hit = self.mod.apply_block(gen, k, s, vec)
                    if hit is None:
                        continue
                    t, out = hit
                    row = self.spaces[t].add(out)
                    if row is not None:
                        self.fresh.append((t, row))
                        queue.append((t, row))


@dataclass
class FusionResult:
    factors: tuple
    character: GradedCharacter
    # dims[r][s] = dim of (F^r / F^(r-1)) in weight space s
    piece_dims: list[list[int]] = field(default_factory=list)
    span_dim: int = 0
    full_dim: int = 0
    parameters_distinct: bool = True

    @property
    def cyclic(self) -> bool:
        return self.span_dim == self.full_dim


def _isotypics(mod: MatrixModule, dims: list[int]) -> dict[int, int]:
    """sl_2 isotypic multiplicities from weight-space dimensions (top weight first)."""
    top = sum(mod.highest)
    out = {}
    for s, d in enumerate(dims):
        weight = top - 2 * s
        if weight < 0:
            break
        above = dims[s - 1] if s else 0
        mult = d - above
        if mult < 0:
            raise ArithmeticError(f"graded piece is not an sl_2-module (weight {weight})")
        if mult:
            out[weight] = mult
    return out


def _integral_module(factors) -> MatrixModule:
    # clearing denominators rescales x (x) t^k by D^k and leaves every F^r unchanged
    factors = [(int(m), Fraction(a)) for m, a in factors]
    den = lcm(1, *(a.denominator for _, a in factors))
    mod = MatrixModule([(m, a * den) for m, a in factors])
    mod.params = tuple(int(a) for a in mod.params)
    return mod


def _grow(mod: MatrixModule):
    """Yield (r, filtration, dims of F^r / F^(r-1)) for r = 0, 1, 2, ...

    F^0 = U(g) v and F^r = U(g) (F^(r-1) + sum_{k>=1} (g (x) t^k) F^(r-k)).
    Only vectors new at step r-k need to be hit by g (x) t^k, since the older
    ones were already accounted for in F^(r-1).
    """
    filt = _Filtration(mod)
    filt.insert(0, [1])
    filt.close([0])
    history = [filt.fresh]
    yield 0, filt, filt.dims()
    r = 0
    while True:
        r += 1
        before = filt.dims()
        filt.fresh = []
        for k in range(1, r + 1):
            for s, vec in history[r - k]:
                for gen in GENERATORS:
                    hit = mod.apply_block(gen, k, s, vec)
                    if hit is not None:
                        filt.insert(*hit)
        filt.close([0])
        history.append(filt.fresh)
        yield r, filt, [a - b for a, b in zip(filt.dims(), before)]


def fusion_filtration(factors: Sequence[tuple[int, object]]) -> FusionResult:
    """Degree filtration of the cyclic submodule and its graded character."""
    mod = _integral_module(factors)
    if not mod.parameters_distinct:
        warnings.warn(f"parameters {mod.params} are not pairwise distinct", FusionWarning, stacklevel=2)
    target = mod.cyclic_span_dim()
    bound = target * max(1, mod._distinct_count)
    pieces, piece_dims = {}, []
    for r, filt, step in _grow(mod):
        if r > bound:
            raise RuntimeError("filtration failed to exhaust the cyclic span")
        piece_dims.append(step)
        iso = _isotypics(mod, step)
        if iso:
            pieces[r] = {(w,): c for w, c in iso.items()}
        if filt.dim >= target:
            break
    return FusionResult(
        tuple(mod.factors), GradedCharacter(pieces), piece_dims, target, mod.dim, mod.parameters_distinct
    )


def fusion_graded_char(factors: Sequence[tuple[int, object]]) -> GradedCharacter:
    return fusion_filtration(factors).character


def annihilates_in_gr(factors: Sequence[tuple[int, object]], gen: str, k: int) -> bool:
    """Whether (gen (x) t^k) v lies in F^(k-1), i.e. vanishes in the graded module."""
    if k < 1:
        raise ValueError("k must be positive")
    mod = _integral_module(factors)
    hit = mod.apply_block(gen, k, 0, [1])
    if hit is None:
        return True
    for r, filt, _ in _grow(mod):
        if r == k - 1:
            t, out = hit
            return filt.spaces[t].contains(out)
    raise AssertionError("unreachable")


def parameter_independence_check(xi, parameter_sets: Sequence[Sequence[int]]) -> bool:
    """True iff every parameter tuple yields the same graded character for CV(xi)."""
    xi = Partition(xi)
    if not parameter_sets:
        raise ValueError("need at least one parameter tuple")
    chars = []
    for params in parameter_sets:
        params = list(params)
        if len(params) != len(xi):
            raise ValueError(f"parameter tuple {params} does not match {len(xi)} parts")
        if len(set(params)) != len(params):
            raise ValueError(f"parameter tuple {params} has repeated entries")
        chars.append(fusion_graded_char(list(zip(xi, params))))
    return all(c == chars[0] for c in chars[1:])
