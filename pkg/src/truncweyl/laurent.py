"""Integer Laurent polynomials in the grading variable ``t``."""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "qbinom", "qbinom_pascal"]


class LaurentPoly:
    """Finitely supported map exponent -> nonzero integer coefficient.

    Instances are treated as immutable; every arithmetic operation returns a
    new polynomial.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, a in (coeffs or {}).items():
            if a:
                c[int(e)] = int(a)
        self._c = c

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        """Coefficients listed from t^low upwards."""
        return cls({low + i: a for i, a in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    @property
    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def __call__(self, x):
        return sum(a * x**e for e, a in self._c.items())

    def at_one(self) -> int:
        return sum(self._c.values())

    def is_nonnegative(self) -> bool:
        return all(a > 0 for a in self._c.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._c)
        for e, a in other._c.items():
            out[e] = out.get(e, 0) + a
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: a * other for e, a in self._c.items()})
        out: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> LaurentPoly:
        """Multiply by t^m."""
        return LaurentPoly({e + m: a for e, a in self._c.items()})

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Quotient when ``divisor`` divides ``self`` exactly over Z[t, 1/t]."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self._c)
        d_hi = divisor.degree
        lead = divisor[d_hi]
        floor = self.low_degree - divisor.low_degree
        quot: dict[int, int] = {}
        while rem:
            hi = max(rem)
            e = hi - d_hi
            q, r = divmod(rem[hi], lead)
            if r or e < floor:
                raise ArithmeticError("division is not exact")
            quot[e] = q
            for de, da in divisor._c.items():
                k = e + de
                v = rem.get(k, 0) - q * da
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, a in self.items():
            if e == 0:
                mono = str(abs(a))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mono = var if abs(a) == 1 else f"{abs(a)}{var}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    def to_json(self) -> dict[str, int]:
        return {str(e): a for e, a in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): a for e, a in data.items()})


_ONE = LaurentPoly({0: 1})


def qbinom(m: int, k: int) -> LaurentPoly:
    """Gaussian binomial [m choose k]_t via the product formula.

    Outside ``0 <= k <= m`` this is the zero polynomial.
    """
    if k < 0 or k > m:
        return LaurentPoly()
    num = _ONE
    den = _ONE
    for j in range(k):
        num = num * LaurentPoly({0: 1, m - j: -1})
        den = den * LaurentPoly({0: 1, k - j: -1})
    return num.exact_div(den)


def qbinom_pascal(m: int, k: int) -> LaurentPoly:
    """Same polynomial from [m, k] = [m-1, k-1] + t^k [m-1, k]."""
    if k < 0 or k > m:
        return LaurentPoly()
    row = [_ONE]
    for n in range(1, m + 1):
        new = []
        for j in range(n + 1):
            left = row[j - 1] if j >= 1 else LaurentPoly()
            right = row[j].shift(j) if j < n else LaurentPoly()
            new.append(left + right)
        row = new
    out = row[k]
    assert out.at_one() == comb(m, k)
    return out
