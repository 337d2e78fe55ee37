"""sl_2 computations for CV, truncated Weyl and Demazure modules.

Everything is driven by the short exact sequence

    0 -> tau_{(l-1) xi_l} CV(xi^-) -> CV(xi) -> CV(xi^+) -> 0

valid whenever xi has l >= 2 nonzero parts.  Graded characters recurse down
to one-part partitions (evaluation modules); Demazure flag multiplicities
recurse down to Demazure shapes.  ``xi^-`` strictly lowers |xi| and ``xi^+``
keeps |xi| while strictly raising xi in dominance order, so both recursions
terminate.  Results are memoised per partition.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, prod

from .charring import GradedCharacter, graded_dim_series, total_dim
from .laurent import LaurentPoly, qbinom
from .partitions import (
    Partition,
    is_demazure_shape,
    xi_ab,
    xi_demazure,
    xi_minus,
    xi_parts,
    xi_plus,
)

__all__ = [
    "Classification",
    "DemazureKind",
    "FlagInadmissibleError",
    "FlagMultiplicities",
    "KernelReport",
    "ModuleLabel",
    "SESReport",
    "classify_demazure",
    "dim_cv",
    "dim_truncated",
    "flag_character",
    "flag_length",
    "flag_mult_level2_closed",
    "flag_multiplicities",
    "gamma",
    "gamma_identity_check",
    "graded_char_cv",
    "graded_char_label",
    "kernel_is_truncated",
    "truncated_flag_identity_check",
    "verify_ses",
]


class FlagInadmissibleError(ValueError):
    """CV(xi) has no Demazure flag of the requested level (level < xi_1)."""

    def __init__(self, xi: Partition, level: int):
        super().__init__(f"CV{xi} has no level-{level} Demazure flag: largest part is {xi[0]}")
        self.largest_part = xi[0]
        self.level = level


def _ses_shift(xi: Partition) -> int:
    shift = (len(xi) - 1) * xi[-1]
    assert shift >= 0
    return shift


# -- dimensions -------------------------------------------------------------

def dim_cv(xi) -> int:
    """prod_j (xi_j + 1); the empty partition gives the trivial module."""
    return prod(p + 1 for p in Partition(xi))


def dim_truncated(lam: int, n: int) -> int:
    """dim W_n(lam) = (q+2)^p (q+1)^(n-p) with lam = n q + p."""
    if lam < 0 or n < 1:
        raise ValueError("need lam >= 0 and n >= 1")
    q, p = divmod(lam, n)
    return (q + 2) ** p * (q + 1) ** (n - p)


# -- graded characters ------------------------------------------------------

@lru_cache(maxsize=None)
def _char(xi: Partition) -> GradedCharacter:
    if len(xi) <= 1:
        return GradedCharacter.irreducible(xi.size)
    return _char(xi_plus(xi)) + _char(xi_minus(xi)).shift(_ses_shift(xi))


def graded_char_cv(xi) -> GradedCharacter:
    """Graded sl_2-isotypic decomposition of CV(xi)."""
    return _char(Partition(xi))


class ModuleKind(enum.Enum):
    CV = "CV"
    TRUNCATED = "W_N"
    WEYL = "W"
    DEMAZURE = "D"


_LABEL_RE = re.compile(
    r"^\s*(?:tau_?(?P<shift>\d+)\s*)?"
    r"(?:(?P<cv>CV)|(?P<w>W)(?:_(?P<n>\d+))?|(?P<d>D))\s*\((?P<args>[\d,\s]*)\)\s*$"
)


@dataclass(frozen=True)
class ModuleLabel:
    """CV(xi), W_N(lam), W(lam) or D(level, lam), optionally grade shifted."""

    kind: ModuleKind
    xi: Partition | None = None
    lam: int | None = None
    n: int | None = None
    level: int | None = None
    grade_shift: int = 0

    @classmethod
    def cv(cls, xi, shift: int = 0) -> ModuleLabel:
        return cls(ModuleKind.CV, xi=Partition(xi), grade_shift=shift)

    @classmethod
    def truncated(cls, lam: int, n: int, shift: int = 0) -> ModuleLabel:
        return cls(ModuleKind.TRUNCATED, lam=lam, n=n, grade_shift=shift)

    @classmethod
    def weyl(cls, lam: int, shift: int = 0) -> ModuleLabel:
        return cls(ModuleKind.WEYL, lam=lam, grade_shift=shift)

    @classmethod
    def demazure(cls, level: int, lam: int, shift: int = 0) -> ModuleLabel:
        return cls(ModuleKind.DEMAZURE, lam=lam, level=level, grade_shift=shift)

    @classmethod
    def parse(cls, text: str) -> ModuleLabel:
        """Parse ``CV(2,1,1)``, ``W_3(4)``, ``W(4)``, ``D(2,4)``, ``tau_2 D(2,3)``."""
        m = _LABEL_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse module label {text!r}")
        shift = int(m["shift"] or 0)
        args = [int(a) for a in m["args"].replace(" ", "").split(",") if a]
        if m["cv"]:
            return cls.cv(args, shift)
        if m["w"]:
            if len(args) != 1:
                raise ValueError("W takes one argument")
            return cls.truncated(args[0], int(m["n"]), shift) if m["n"] else cls.weyl(args[0], shift)
        if len(args) != 2:
            raise ValueError("D takes (level, lambda)")
        return cls.demazure(args[0], args[1], shift)

    def resolve(self) -> Partition:
        """The partition xi with this module isomorphic to CV(xi) (up to the shift)."""
        if self.grade_shift < 0:
            raise ValueError("grade shifts must be non-negative")
        if self.kind is ModuleKind.CV:
            return Partition(self.xi)
        if self.lam is None or self.lam < 0:
            raise ValueError(f"{self.kind.value} needs a non-negative highest weight")
        if self.kind is ModuleKind.TRUNCATED:
            return xi_parts(self.lam, self.n)
        if self.kind is ModuleKind.WEYL:
            return xi_parts(self.lam, infinite=True)
        return xi_demazure(self.level, self.lam)

    def __str__(self) -> str:
        if self.kind is ModuleKind.CV:
            body = "CV(" + ",".join(map(str, self.xi)) + ")"
        elif self.kind is ModuleKind.TRUNCATED:
            body = f"W_{self.n}({self.lam})"
        elif self.kind is ModuleKind.WEYL:
            body = f"W({self.lam})"
        else:
            body = f"D({self.level},{self.lam})"
        return f"tau_{self.grade_shift} {body}" if self.grade_shift else body


def graded_char_label(label: ModuleLabel | str) -> GradedCharacter:
    if isinstance(label, str):
        label = ModuleLabel.parse(label)
    return graded_char_cv(label.resolve()).shift(label.grade_shift)


# -- Demazure flags ---------------------------------------------------------

@dataclass(frozen=True)
class FlagMultiplicities:
    """mu -> [CV(xi) : D(level, mu)](t)."""

    xi: Partition
    level: int
    entries: dict[int, LaurentPoly] = field(default_factory=dict)

    def __getitem__(self, mu: int) -> LaurentPoly:
        return self.entries.get(mu, LaurentPoly())

    @property
    def length(self) -> int:
        return sum(p.at_one() for p in self.entries.values())

    def generating_function(self, x: int = 1, t: int = 1) -> int:
        """L(x, t) = sum_k [CV(xi) : D(level, |xi| - 2k)](t) x^k."""
        size = self.xi.size
        return sum(p(t) * x ** ((size - mu) // 2) for mu, p in self.entries.items())

    def balanced(self) -> bool:
        flagged = sum(p.at_one() * dim_cv(xi_demazure(self.level, mu)) for mu, p in self.entries.items())
        return flagged == dim_cv(self.xi)

    def to_json(self) -> dict:
        return {
            "xi": list(self.xi),
            "level": self.level,
            "entries": [
                {"mu": mu, "poly": p.to_json(), "text": str(p)}
                for mu, p in sorted(self.entries.items(), reverse=True)
            ],
        }


@lru_cache(maxsize=None)
def _flag(xi: Partition, level: int) -> tuple[tuple[int, LaurentPoly], ...]:
    if is_demazure_shape(xi, level):
        return ((xi.size, LaurentPoly({0: 1})),)
    out: dict[int, LaurentPoly] = {}
    for mu, p in _flag(xi_plus(xi), level):
        out[mu] = out.get(mu, LaurentPoly()) + p
    s = _ses_shift(xi)
    for mu, p in _flag(xi_minus(xi), level):
        out[mu] = out.get(mu, LaurentPoly()) + p.shift(s)
    return tuple(sorted((mu, p) for mu, p in out.items() if p))


def flag_multiplicities(xi, level: int) -> FlagMultiplicities:
    """Graded multiplicities of level-``level`` Demazure modules in CV(xi)."""
    xi = Partition(xi)
    if level < 1:
        raise ValueError("level must be positive")
    if xi and level < xi[0]:
        raise FlagInadmissibleError(xi, level)
    return FlagMultiplicities(xi, level, dict(_flag(xi, level)))


def flag_length(xi, level: int) -> int:
    return flag_multiplicities(xi, level).length


def flag_character(flags: FlagMultiplicities) -> GradedCharacter:
    """sum over mu, m of [coeff of t^m] * tau_m char D(level, mu)."""
    out = GradedCharacter()
    for mu, p in flags.entries.items():
        d = graded_char_cv(xi_demazure(flags.level, mu))
        for m, c in p.items():
            if c < 0:
                raise ArithmeticError("negative flag multiplicity")
            out = out + c * d.shift(m)
    return out


def flag_mult_level2_closed(lam: int, n: int | None, k: int, *, infinite: bool = False) -> LaurentPoly:
    """Closed form for [W_n(lam) : D(2, lam - 2k)](t).

    Truncated: requires 1 < n <= lam < 2n and 0 <= 2k <= lam; gives
    t^(k ceil(lam/2)) [n - ceil(lam/2) choose k]_t, or 0 once k exceeds
    n - ceil(lam/2).  With ``infinite=True`` (the Weyl module W(lam)) the
    binomial is [floor(lam/2) choose k]_t.
    """
    up = -(-lam // 2)
    if infinite:
        if not 0 <= k <= lam // 2:
            raise ValueError(f"k={k} outside 0..{lam // 2}")
        return qbinom(lam // 2, k).shift(k * up)
    if n is None or not (1 < n <= lam < 2 * n):
        raise ValueError(f"closed form needs 1 < n <= lam < 2n, got lam={lam}, n={n}")
    if not 0 <= 2 * k <= lam:
        raise ValueError(f"k={k} outside 0..lam/2")
    if k > n - up:
        return LaurentPoly()
    return qbinom(n - up, k).shift(k * up)


# -- Demazure classification ------------------------------------------------

class DemazureKind(enum.Enum):
    DEMAZURE_Q = "Demazure at level q"
    DEMAZURE_Q1 = "Demazure at level q+1"
    NOT_DEMAZURE = "not Demazure"


@dataclass(frozen=True)
class Classification:
    lam: int
    n: int
    kind: DemazureKind
    level: int
    # flag length at ``level``; above 1 is the witness for NOT_DEMAZURE
    flag_length: int

    @property
    def is_demazure(self) -> bool:
        return self.kind is not DemazureKind.NOT_DEMAZURE

    def __str__(self) -> str:
        if self.is_demazure:
            return f"W_{self.n}({self.lam}) = D({self.level},{self.lam})"
        return f"W_{self.n}({self.lam}) is not Demazure (level-{self.level} flag length {self.flag_length})"


def classify_demazure(lam: int, n: int) -> Classification:
    if lam < 0 or n < 1:
        raise ValueError("need lam >= 0 and n >= 1")
    q, p = divmod(lam, n)
    xi = xi_parts(lam, n)
    if p == 0:
        kind, level = DemazureKind.DEMAZURE_Q, q
    elif p in (n - 1, lam):
        kind, level = DemazureKind.DEMAZURE_Q1, q + 1
    else:
        length = flag_length(xi, q + 1)
        if length <= 1:
            raise AssertionError(f"W_{n}({lam}) has a one-step level-{q + 1} flag but p={p}")
        return Classification(lam, n, DemazureKind.NOT_DEMAZURE, q + 1, length)
    # CV(xi) = D(level, lam) must be visible on the partition itself
    length = flag_length(xi, max(level, 1))
    if not is_demazure_shape(xi, max(level, 1)) or length != 1:
        raise AssertionError(f"W_{n}({lam}) does not have Demazure shape at level {level}")
    return Classification(lam, n, kind, level, length)


# -- kernels and exact sequences --------------------------------------------

@dataclass(frozen=True)
class KernelReport:
    lam: int
    n: int
    delta_n_lam: int
    delta_n_lam_minus_2: int
    delta_n_minus_1_lam: int

    @property
    def holds(self) -> bool:
        return self.delta_n_lam - self.delta_n_lam_minus_2 == self.delta_n_minus_1_lam

    def __bool__(self) -> bool:
        return self.holds


def kernel_is_truncated(lam: int, n: int) -> KernelReport:
    """Whether ker(W_n(lam) -> W_{n-1}(lam)) is tau_{n-1} W_n(lam - 2), by dimension."""
    if lam < 2 or n < 2:
        raise ValueError("need lam >= 2 and n >= 2")
    return KernelReport(lam, n, dim_truncated(lam, n), dim_truncated(lam - 2, n), dim_truncated(lam, n - 1))


@dataclass
class SESReport:
    xi: Partition
    plus: Partition
    minus: Partition
    shift: int
    dims: tuple[int, int, int]
    problems: list[str] = field(default_factory=list)
    # set when xi = xi_parts(lam, N) with N <= lam < 2N
    truncated: tuple[int, int] | None = None
    minus_index: int | None = None
    literal_minus_index: int | None = None
    literal_minus_matches: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        out = {
            "xi": list(self.xi),
            "xi_plus": list(self.plus),
            "xi_minus": list(self.minus),
            "shift": self.shift,
            "dims": list(self.dims),
            "ok": self.ok,
            "problems": list(self.problems),
        }
        if self.truncated:
            lam, n = self.truncated
            out["truncated"] = {
                "lambda": lam,
                "N": n,
                "kernel_index": self.minus_index,
                "literal_kernel_index": self.literal_minus_index,
                "literal_kernel_matches": self.literal_minus_matches,
            }
        return out


def verify_ses(xi) -> SESReport:
    """Check dimension and graded-character additivity of the CV exact sequence.

    For xi = xi_parts(lam, N) with N <= lam < 2N also check the identification
    CV(xi^+) = W_{N-1}(lam) and CV(xi^-) = W_{N-2+delta}(lam - 2), where delta
    is 1 exactly when p = lam - N equals N - 1.
    """
    xi = Partition(xi)
    if len(xi) < 2:
        raise ValueError(f"{xi} has fewer than two parts")
    plus, minus, s = xi_plus(xi), xi_minus(xi), _ses_shift(xi)
    dims = (dim_cv(xi), dim_cv(plus), dim_cv(minus))
    rep = SESReport(xi, plus, minus, s, dims)
    if dims[0] != dims[1] + dims[2]:
        rep.problems.append(f"dimension: {dims[0]} != {dims[1]} + {dims[2]}")
    if graded_char_cv(xi) != graded_char_cv(plus) + graded_char_cv(minus).shift(s):
        rep.problems.append("graded character is not additive across the sequence")
    lam, n = xi.size, len(xi)
    if n <= lam < 2 * n and xi == xi_parts(lam, n):
        p = lam - n
        boundary = int(p == n - 1)
        rep.truncated = (lam, n)
        rep.minus_index = n - 2 + boundary
        rep.literal_minus_index = n - 1 - boundary
        if plus != xi_parts(lam, n - 1):
            rep.problems.append(f"xi^+ = {plus} is not xi_parts({lam}, {n - 1})")
        target = xi_parts(lam - 2, rep.minus_index) if rep.minus_index > 0 else Partition()
        if minus != target:
            rep.problems.append(f"xi^- = {minus} is not xi_parts({lam - 2}, {rep.minus_index})")
        literal = xi_parts(lam - 2, rep.literal_minus_index) if rep.literal_minus_index > 0 else Partition()
        rep.literal_minus_matches = minus == literal
    return rep


# -- gamma functions --------------------------------------------------------

def gamma(a: int, b: int, level: int, mu: int) -> LaurentPoly:
    """[CV(((level+1)^(a), level^(b))) : D(level+1, mu)](t)."""
    return flag_multiplicities(xi_ab(a, b, level), level + 1)[mu]


def gamma_identity_check(a: int, b: int, level: int, mu: int) -> bool:
    """Peel the a largest parts off and compare with the shifted remainder.

    gamma_{a,b}(mu) = t^(a (lam - mu) / 2) gamma_{0,b}(mu - a (level+1)) where
    lam = level (a+b) + a; for b in {0, 1} also gamma_{a,b}(mu) = delta_{lam,mu}.
    """
    if min(a, b, level, mu) < 0:
        raise ValueError("parameters must be non-negative")
    lam = level * (a + b) + a
    lhs = gamma(a, b, level, mu)
    rest = mu - a * (level + 1)
    if rest < 0 or (lam - mu) % 2:
        rhs = LaurentPoly()
    else:
        rhs = gamma(0, b, level, rest).shift(a * (lam - mu) // 2)
    ok = lhs == rhs
    if b in (0, 1) and a + b > 0:
        ok = ok and lhs == (LaurentPoly({0: 1}) if mu == lam else LaurentPoly())
    return ok


def truncated_flag_identity_check(lam: int, n: int, mu: int) -> bool:
    """[W_n(lam) : D(q+1, mu)](t) against t^(p (lam-mu)/2) [D(q, q(n-p)) : D(q+1, mu - p(q+1))](t)."""
    q, p = divmod(lam, n)
    lhs = flag_multiplicities(xi_parts(lam, n), q + 1)[mu]
    base = xi_ab(0, n - p, q)
    rest = mu - p * (q + 1)
    if rest < 0 or (lam - mu) % 2:
        rhs = LaurentPoly()
    else:
        rhs = flag_multiplicities(base, q + 1)[rest].shift(p * (lam - mu) // 2)
    return lhs == rhs and gamma_identity_check(p, n - p, q, mu)
