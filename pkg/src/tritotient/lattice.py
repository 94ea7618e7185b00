"""Lattices of type T: Gram matrix T(x1, ..., xd) with every x_i >= 2.

:func:`iso_equivalent` only applies the classification rule "same word or
reversed word". It is not a general lattice isometry test, and the rule itself
is taken as given rather than derived here.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Iterator, Sequence

from .tridiag import TriMatrix, determinant

__all__ = [
    "LatticeT",
    "RankTooLargeError",
    "MAX_SEARCH_RANK",
    "gram",
    "quadratic_form",
    "short_vectors",
    "minimal_norm",
    "root_blocks",
    "iso_equivalent",
]

MAX_SEARCH_RANK = 8


class RankTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeT:
    word: tuple

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if not self.word:
            raise ValueError("empty word")
        if min(self.word) < 2:
            raise ValueError("type T lattices need letters >= 2")

    @property
    def rank(self):
        return len(self.word)

    @property
    def determinant(self):
        return determinant(self.word)


def _word(L):
    return L.word if isinstance(L, LatticeT) else tuple(L)


def gram(L) -> list:
    return TriMatrix(_word(L)).dense()


def quadratic_form(G: Sequence[Sequence[int]], x: Sequence[int]) -> int:
    n = len(x)
    return sum(G[i][j] * x[i] * x[j] for i in range(n) for j in range(n))


def _cholesky_form(G):
    """Coefficients q with Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2."""
    n = len(G)
    q = [[Fraction(v) for v in row] for row in G]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for m in range(k, n):
                q[k][m] -= q[k][i] * q[i][m]
    return q


def _int_range(center: Fraction, radius_sq: Fraction):
    """Integers x with (x - center)^2 <= radius_sq, found exactly."""
    if radius_sq < 0:
        return range(0)
    s = isqrt(ceil(radius_sq)) + 1
    lo = floor(center) - s
    hi = ceil(center) + s
    xs = [x for x in range(lo, hi + 1) if (x - center) ** 2 <= radius_sq]
    return range(xs[0], xs[-1] + 1) if xs else range(0)


def short_vectors(G, bound) -> Iterator[tuple]:
    """All nonzero integer x with x^T G x <= bound (Fincke-Pohst, exact).

    Coordinates are fixed from the last to the first; at each level the
    remaining budget bounds the current coordinate to an interval, so nothing
    outside the ellipsoid is visited.
    """
    n = len(G)
    q = _cholesky_form(G)
    bound = Fraction(bound)
    x = [0] * n

    def rec(i, budget):
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for v in _int_range(center, budget / q[i][i]):
            x[i] = v
            used = q[i][i] * (v - center) ** 2
            if i == 0:
                if any(x):
                    yield tuple(x)
            else:
                yield from rec(i - 1, budget - used)
        x[i] = 0

    if n:
        yield from rec(n - 1, bound)


def minimal_norm(L) -> int:
    """Least x^T G x over nonzero integer vectors, by exhaustive search."""
    word = _word(L)
    if len(word) > MAX_SEARCH_RANK:
        raise RankTooLargeError("rank too large for exhaustive search")
    G = gram(word)
    best = min(G[i][i] for i in range(len(word)))
    for v in short_vectors(G, best):
        best = min(best, quadratic_form(G, v))
    return best


def root_blocks(L) -> list:
    """Maximal runs of the letter 2 as 1-based inclusive (start, end) pairs."""
    word = _word(L)
    blocks = []
    start = None
    for i, x in enumerate(word, 1):
        if x == 2 and start is None:
            start = i
        elif x != 2 and start is not None:
            blocks.append((start, i - 1))
            start = None
    if start is not None:
        blocks.append((start, len(word)))
    return blocks


def iso_equivalent(L1, L2) -> bool:
    w1, w2 = _word(L1), _word(L2)
    return w1 == w2 or w1 == w2[::-1]
