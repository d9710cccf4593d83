"""Group elements as pairs of integer matrices acting on root coordinates.

An :class:`Element` stores the images of the simple roots under ``w``
(``fwd``) and under ``w^{-1}`` (``inv``), column by column.  Each column is a
root, so descent tests are sign checks on a single column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .cartan import CoxeterData, Gen
from .roots import Root, is_negative, is_positive, simple_action, simple_root

DEFAULT_CAP = 1_000_000


class BallTooLarge(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"ball enumeration exceeded cap={cap} elements")
        self.cap = cap


@dataclass(frozen=True)
class Element:
    fwd: tuple[Root, ...]
    inv: tuple[Root, ...] = field(compare=False, repr=False)
    length: int = field(compare=False)

    def __hash__(self) -> int:
        return hash(self.fwd)

    def __call__(self, x: Sequence[int]) -> Root:
        n = len(self.fwd)
        out = [0] * n
        for j, xj in enumerate(x):
            if xj:
                col = self.fwd[j]
                for i in range(n):
                    out[i] += xj * col[i]
        return tuple(out)

    def apply_inverse(self, x: Sequence[int]) -> Root:
        n = len(self.inv)
        out = [0] * n
        for j, xj in enumerate(x):
            if xj:
                col = self.inv[j]
                for i in range(n):
                    out[i] += xj * col[i]
        return tuple(out)

    def is_left_descent(self, s: int) -> bool:
        return is_negative(self.inv[s])

    def is_right_descent(self, s: int) -> bool:
        return is_negative(self.fwd[s])

    def left_descents(self) -> list[int]:
        return [s for s, col in enumerate(self.inv) if is_negative(col)]

    def right_descents(self) -> list[int]:
        return [s for s, col in enumerate(self.fwd) if is_negative(col)]


class CoxeterGroup:
    """Element arithmetic for one :class:`CoxeterData`."""

    def __init__(self, data: CoxeterData):
        self.data = data
        n = data.rank
        basis = tuple(simple_root(data, i) for i in range(n))
        self._e = Element(basis, basis, 0)
        self._gens = tuple(self.lmul(i, self._e) for i in range(n))
        self._inv_cache: dict[Element, frozenset[Root]] = {}
        self._balls: dict[int, list[Element]] = {}

    def __repr__(self) -> str:
        return f"CoxeterGroup({list(self.data.generators)})"

    @property
    def rank(self) -> int:
        return self.data.rank

    # -- construction -------------------------------------------------------

    def identity(self) -> Element:
        return self._e

    def gen(self, s: Gen) -> Element:
        return self._gens[self.data.index(s)]

    def lmul(self, s: int, w: Element) -> Element:
        """``s * w``."""
        data = self.data
        up = not is_negative(w.inv[s])
        fwd = tuple(simple_action(data, s, col) for col in w.fwd)
        row = data.matrix[s]
        ws = w.inv[s]
        # (W^{-1} S) e_j = W^{-1} alpha_j - A[s][j] W^{-1} alpha_s
        inv = tuple(
            col if row[j] == 0 else tuple(c - row[j] * d for c, d in zip(col, ws))
            for j, col in enumerate(w.inv)
        )
        return Element(fwd, inv, w.length + (1 if up else -1))

    def rmul(self, w: Element, s: int) -> Element:
        """``w * s``."""
        data = self.data
        up = not is_negative(w.fwd[s])
        row = data.matrix[s]
        ws = w.fwd[s]
        fwd = tuple(
            col if row[j] == 0 else tuple(c - row[j] * d for c, d in zip(col, ws))
            for j, col in enumerate(w.fwd)
        )
        inv = tuple(simple_action(data, s, col) for col in w.inv)
        return Element(fwd, inv, w.length + (1 if up else -1))

    def from_word(self, word: Iterable[Gen]) -> Element:
        w = self._e
        for s in word:
            w = self.rmul(w, self.data.index(s))
        return w

    def mul(self, u: Element, v: Element) -> Element:
        w = u
        for s in self.canonical_word(v):
            w = self.rmul(w, s)
        return w

    def inverse(self, u: Element) -> Element:
        return Element(u.inv, u.fwd, u.length)

    # -- words and lengths --------------------------------------------------

    def is_left_descent(self, s: Gen, w: Element) -> bool:
        return w.is_left_descent(self.data.index(s))

    def length(self, w: Element) -> int:
        return w.length

    def canonical_word(self, w: Element) -> tuple[int, ...]:
        """Peel the smallest-index left descent until the identity is reached."""
        word = []
        while w.length:
            s = next(i for i, col in enumerate(w.inv) if is_negative(col))
            word.append(s)
            w = self.lmul(s, w)
        return tuple(word)

    def word_names(self, w: Element) -> list[str]:
        return self.data.names(self.canonical_word(w))

    def is_reduced(self, word: Sequence[Gen]) -> bool:
        return self.from_word(word).length == len(word)

    def inversions(self, w: Element) -> frozenset[Root]:
        """Positive roots ``a_1...a_{i-1} alpha_{a_i}`` along the canonical word."""
        cached = self._inv_cache.get(w)
        if cached is not None:
            return cached
        out = []
        prefix = self._e
        for s in self.canonical_word(w):
            out.append(prefix.fwd[s])
            prefix = self.rmul(prefix, s)
        result = frozenset(out)
        if len(self._inv_cache) < 200_000:
            self._inv_cache[w] = result
        return result

    def inversion_list(self, word: Sequence[Gen]) -> list[Root]:
        """Roots of ``t_1, t_2, ...`` in the order of a given (reduced) word."""
        out = []
        prefix = self._e
        for s in self.data.word(word):
            out.append(prefix.fwd[s])
            prefix = self.rmul(prefix, s)
        return out

    # -- weak order ---------------------------------------------------------

    def weak_leq(self, u: Element, w: Element) -> bool:
        """Right weak order by shared left-descent peeling."""
        if u.length > w.length:
            return False
        while u.length:
            s = next(i for i, col in enumerate(u.inv) if is_negative(col))
            if not is_negative(w.inv[s]):
                return False
            u = self.lmul(s, u)
            w = self.lmul(s, w)
        return True

    def word_is_prefix(self, word: Sequence[int], w: Element) -> bool:
        """True iff the (reduced) ``word`` multiplies to an element ``<= w``."""
        for s in word:
            if not is_negative(w.inv[s]):
                return False
            w = self.lmul(s, w)
        return True

    def strip_prefix(self, word: Sequence[int], w: Element) -> Element:
        for s in word:
            w = self.lmul(s, w)
        return w

    def parabolic_proj(self, w: Element, J: Iterable[Gen]) -> Element:
        """``w_J``: the element of ``W_J`` with ``inv(w_J) = inv(w) & W_J``."""
        Js = self.data.subset(J)
        result = self._e
        while True:
            s = next((i for i in sorted(Js) if is_negative(w.inv[i])), None)
            if s is None:
                return result
            result = self.rmul(result, s)
            w = self.lmul(s, w)

    def in_parabolic(self, w: Element, J: Iterable[Gen]) -> bool:
        Js = self.data.subset(J)
        return all(i in Js for i in self.canonical_word(w))

    # -- enumeration --------------------------------------------------------

    def ball(self, L: int, cap: int = DEFAULT_CAP) -> list[Element]:
        """All elements of length ``<= L``, ordered by length then discovery."""
        if L < 0:
            raise ValueError("L must be nonnegative")
        cached = self._balls.get(L)
        if cached is not None:
            if len(cached) > cap:
                raise BallTooLarge(cap)
            return list(cached)
        out = [self._e]
        frontier = [self._e]
        for _ in range(L):
            seen: dict[Element, None] = {}
            for w in frontier:
                for s in range(self.rank):
                    if is_positive(w.fwd[s]):
                        seen.setdefault(self.rmul(w, s))
            frontier = list(seen)
            out.extend(frontier)
            if len(out) > cap:
                raise BallTooLarge(cap)
            if not frontier:
                break
        self._balls[L] = out
        return list(out)

    def lower_interval(self, w: Element) -> list[Element]:
        """Every ``u <= w``, found by stripping right descents."""
        seen = {w: None}
        stack = [w]
        while stack:
            x = stack.pop()
            for s in x.right_descents():
                y = self.rmul(x, s)
                if y not in seen:
                    seen[y] = None
                    stack.append(y)
        return list(seen)

    def reduced_words(self, max_length: int) -> Iterator[tuple[int, ...]]:
        """Every reduced word of length ``<= max_length`` (depth first)."""

        def rec(w: Element, word: tuple[int, ...]):
            yield word
            if len(word) == max_length:
                return
            for s in range(self.rank):
                if is_positive(w.fwd[s]):
                    yield from rec(self.rmul(w, s), word + (s,))

        yield from rec(self._e, ())
