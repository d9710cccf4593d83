"""Reflection representation on integer root coordinates.

Roots are plain ``tuple[int, ...]`` in the simple-root basis.  Reflections
are identified with their positive roots.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .cartan import CartanError, CoxeterData, Gen, Orientation, is_linear_extension

Root = tuple[int, ...]


def simple_root(data: CoxeterData, s: Gen) -> Root:
    i = data.index(s)
    return tuple(int(j == i) for j in range(data.rank))


def is_positive(x: Sequence[int]) -> bool:
    return any(x) and all(c >= 0 for c in x)


def is_negative(x: Sequence[int]) -> bool:
    return any(x) and all(c <= 0 for c in x)


def neg(x: Sequence[int]) -> Root:
    return tuple(-c for c in x)


def positive_part(x: Sequence[int]) -> Root:
    """The positive root among ``x`` and ``-x``."""
    return tuple(x) if is_positive(x) else neg(x)


def simple_action(data: CoxeterData, s: Gen, x: Sequence[int]) -> Root:
    """``s(x) = x - (sum_j A[s][j] x_j) alpha_s``."""
    i = data.index(s)
    row = data.matrix[i]
    c = sum(a * xj for a, xj in zip(row, x))
    if c == 0:
        return tuple(x)
    out = list(x)
    out[i] -= c
    return tuple(out)


def act_word(data: CoxeterData, word: Sequence[Gen], x: Sequence[int]) -> Root:
    """Apply ``a_1 a_2 ... a_k`` to ``x`` (rightmost letter acts first)."""
    y = tuple(x)
    for s in reversed(word):
        y = simple_action(data, s, y)
    return y


def K_pair(data: CoxeterData, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """The symmetric form with ``K(alpha_r, alpha_s) = delta(r) A[r][s]``."""
    A, d = data.matrix, data.delta
    total = Fraction(0)
    for r, xr in enumerate(x):
        if xr:
            total += d[r] * xr * sum(a * ys for a, ys in zip(A[r], y))
    return total


def coroot_pair(data: CoxeterData, beta: Sequence[int], x: Sequence[int]) -> Fraction:
    """``K(beta^vee, x) = 2 K(beta, x) / K(beta, beta)``."""
    if not any(beta):
        raise CartanError("coroot_pair needs a nonzero root")
    return 2 * K_pair(data, beta, x) / K_pair(data, beta, beta)


def reflect(data: CoxeterData, beta: Sequence[int], x: Sequence[int]) -> Root:
    c = coroot_pair(data, beta, x)
    if c.denominator != 1:
        raise ArithmeticError(f"non-integral reflection of {tuple(x)} in {tuple(beta)}")
    k = int(c)
    return tuple(xi - k * bi for xi, bi in zip(x, beta))


def reflection_of_word(data: CoxeterData, word: Sequence[Gen]) -> Root:
    """Root of ``a_1 ... a_k ... a_1``, computed as ``a_1...a_{k-1} alpha_{a_k}``."""
    if not word:
        raise ValueError("empty word has no reflection")
    return act_word(data, word[:-1], simple_root(data, word[-1]))


def dihedral_order(data: CoxeterData, beta: Sequence[int], gamma: Sequence[int]) -> float:
    """Order of the product of the reflections in ``beta`` and ``gamma``."""
    if _proportional(beta, gamma):
        raise ValueError("dihedral_order needs non-proportional roots")
    prod = coroot_pair(data, beta, gamma) * coroot_pair(data, gamma, beta)
    if prod.denominator != 1:
        raise ArithmeticError("non-crystallographic pairing")
    p = int(prod)
    if p >= 4:
        return math.inf
    return {0: 2, 1: 3, 2: 4, 3: 6}[p]


def _proportional(x: Sequence[int], y: Sequence[int]) -> bool:
    return all(x[i] * y[j] == x[j] * y[i] for i in range(len(x)) for j in range(i + 1, len(x)))


def reflections_commute(data: CoxeterData, beta: Sequence[int], gamma: Sequence[int]) -> bool:
    if _proportional(beta, gamma):
        return True
    return K_pair(data, beta, gamma) == 0


def path_expansion(ori: Orientation, J: Iterable[Gen], extension: Sequence[Gen]) -> Root:
    """Sum over directed paths ending at the last letter of ``extension``.

    Each path ``r_1 <- r_2 <- ... <- r_j`` inside ``J`` with ``r_j`` the last
    letter contributes ``(-A[r_{j-1}][r_j]) ... (-A[r_1][r_2]) alpha_{r_1}``:
    reflecting in ``alpha_a`` adds ``-A[a][b]`` times the ``alpha_b``
    coefficient, so the row index is the earlier letter.
    """
    data = ori.data
    Js = data.subset(J)
    ext = data.word(extension)
    if not is_linear_extension(ori, Js, ext):
        raise ValueError("extension is not a linear extension of the precedence poset")
    A = data.matrix
    coeff = [0] * data.rank
    coeff[ext[-1]] = 1
    # walk backwards: arrows only run from later letters to earlier ones
    for k in range(len(ext) - 1, -1, -1):
        u = ext[k]
        if coeff[u] == 0:
            continue
        for v in ori.successors[u] & Js:
            coeff[v] += coeff[u] * (-A[v][u])
    return tuple(coeff)


def omega_simple(ori: Orientation, r: int, s: int) -> Fraction:
    """``omega(alpha_r, alpha_s)``: ``delta(r) A[r][s]`` when ``r -> s``, negated
    when ``s -> r``, zero without an edge."""
    if (r, s) in ori.arrows:
        return ori.data.delta[r] * ori.data.matrix[r][s]
    if (s, r) in ori.arrows:
        return -ori.data.delta[r] * ori.data.matrix[r][s]
    return Fraction(0)


def omega(ori: Orientation, x: Sequence[int], y: Sequence[int]) -> Fraction:
    """Skew-symmetric form attached to the orientation."""
    total = Fraction(0)
    for r, s in ori.arrows:
        w = ori.data.delta[r] * ori.data.matrix[r][s]
        total += w * (x[r] * y[s] - x[s] * y[r])
    return total


def in_positive_span(beta: Sequence[int], gamma: Sequence[int], x: Sequence[int]) -> bool:
    """True iff ``x = a*beta + b*gamma`` with rationals ``a, b > 0``."""
    n = len(x)
    # find a pair of coordinates where (beta, gamma) is invertible
    for i in range(n):
        for j in range(i + 1, n):
            det = beta[i] * gamma[j] - beta[j] * gamma[i]
            if det == 0:
                continue
            a = Fraction(x[i] * gamma[j] - x[j] * gamma[i], det)
            b = Fraction(beta[i] * x[j] - beta[j] * x[i], det)
            if a <= 0 or b <= 0:
                return False
            return all(a * beta[k] + b * gamma[k] == x[k] for k in range(n))
    return False
