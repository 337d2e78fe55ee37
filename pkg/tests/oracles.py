"""Independent reference computations used to cross-check the library.

None of these share code paths with the routines they check beyond the
basic data types.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import prod

from truncweyl.charring import GradedCharacter
from truncweyl.laurent import LaurentPoly, qbinom_pascal


def delta(lam: int, n: int) -> int:
    """dim W_n(lam) by multiplying out the parts one at a time."""
    q, p = lam // n, lam % n
    return prod((q + 2) if j < p else (q + 1) for j in range(n))


def weyl_module_char(n: int) -> GradedCharacter:
    """Graded character of the local Weyl module W(n) for sl_2.

    V(n - 2k) occurs with graded multiplicity [n, k]_t - [n, k-1]_t.
    """
    pieces: dict[int, dict] = {}
    for k in range(n // 2 + 1):
        poly = qbinom_pascal(n, k) - qbinom_pascal(n, k - 1)
        for d, c in poly.items():
            pieces.setdefault(d, {})[(n - 2 * k,)] = c
    return GradedCharacter(pieces)


def peel_flag(char: GradedCharacter, level: int, demazure_char) -> dict[int, LaurentPoly]:
    """Flag multiplicities by repeatedly stripping the highest remaining weight.

    Every D(level, mu) contains V(mu) only in degree 0 and otherwise lower
    weights, so the top weight of what is left must start a Demazure layer.
    """
    rest = {k: dict(v) for k, v in char.pieces.items()}
    out: dict[int, LaurentPoly] = {}
    while any(rest.values()):
        mu = max(w[0] for piece in rest.values() for w in piece)
        for deg in sorted(rest):
            c = rest[deg].get((mu,), 0)
            if not c:
                continue
            out[mu] = out.get(mu, LaurentPoly()) + LaurentPoly({deg: c})
            for k, piece in demazure_char(level, mu).shift(deg).pieces.items():
                row = rest.setdefault(k, {})
                for w, m in piece.items():
                    left = row.get(w, 0) - c * m
                    assert left >= 0, "flag does not exist"
                    if left:
                        row[w] = left
                    else:
                        row.pop(w, None)
        rest = {k: v for k, v in rest.items() if v}
    return out


def weyl_dim_bruteforce(cartan, lam) -> int:
    """Weyl dimension formula with the positive roots regenerated by reflecting simple roots."""
    n = len(cartan)
    # symmetrise: d_i c_ij = d_j c_ji
    d = [None] * n
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if cartan[i][j] and d[i] is not None and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    changed = True
    roots = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    frontier = list(roots)
    while frontier:
        new = []
        for r in frontier:
            for i in range(n):
                pair = sum(r[j] * cartan[i][j] for j in range(n))
                s = tuple(r[j] - (pair if j == i else 0) for j in range(n))
                if all(x >= 0 for x in s) and any(s) and s not in roots:
                    roots.add(s)
                    new.append(s)
        frontier = new

    def ip(a, b):
        # (alpha_i, alpha_j) = d_i c_ij (up to one global scale)
        return sum(a[i] * b[j] * d[i] * cartan[i][j] for i in range(n) for j in range(n))

    # (lam + rho)(h_alpha) = sum_i (lam_i + 1) r_i d_i / d_alpha with d_alpha = (alpha, alpha) / 2
    num = den = Fraction(1)
    for r in roots:
        d_alpha = ip(r, r) / 2
        num *= sum((lam[i] + 1) * r[i] * d[i] for i in range(n)) / d_alpha
        den *= sum(r[i] * d[i] for i in range(n)) / d_alpha
    out = num / den
    assert out.denominator == 1
    return int(out)


def brute_maximal(rs, lam, n, profile, enumerate_tuples) -> set:
    """Maximal sorted tuples by pairwise comparison of every element."""
    tups = list(enumerate_tuples(rs, lam, n))
    profs = [profile(rs, t) for t in tups]
    top = set()
    for t, p in zip(tups, profs):
        if not any(all(x <= y for x, y in zip(p, q)) and p != q for q in profs):
            top.add(t.sorted_rep())
    return top


def compositions(total: int, parts: int):
    for c in product(range(total + 1), repeat=parts):
        if sum(c) == total:
            yield c
