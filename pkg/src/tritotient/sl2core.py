"""Words in the matrices M(x) = [[0, -1], [1, x]] of SL2(Z).

A word ``(x1, ..., xn)`` maps to the product ``M(x1) @ ... @ M(xn)``. When all
letters are at least 2 the product has the shape ``[[-a, -b], [c, d]]`` with
``0 <= a < min(b, c)``, ``max(b, c) < d`` and ``c - a <= d - b``, and such a
matrix determines its word uniquely (:func:`factorize`).
"""
from dataclasses import dataclass
from typing import Iterable

from . import _backend

__all__ = [
    "Mat2",
    "FactorizationError",
    "m_alpha",
    "m_product",
    "factorize",
    "in_cone",
    "verify_word_calculus",
]


class FactorizationError(ValueError):
    """Raised when a matrix is not a product of letters >= 2."""


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix ``[[m11, m12], [m21, m22]]`` with signed entries.

    The accessors ``a, b, c, d`` follow the ``[[-a, -b], [c, d]]`` layout, so
    for products of letters >= 2 all four are nonnegative.
    """

    m11: int
    m12: int
    m21: int
    m22: int

    @classmethod
    def from_abcd(cls, a, b, c, d):
        return cls(-a, -b, c, d)

    @property
    def a(self):
        return -self.m11

    @property
    def b(self):
        return -self.m12

    @property
    def c(self):
        return self.m21

    @property
    def d(self):
        return self.m22

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self):
        """Inverse of a unimodular matrix."""
        if self.det() != 1:
            raise ValueError("matrix is not unimodular")
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def __matmul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def rows(self):
        return ((self.m11, self.m12), (self.m21, self.m22))

    def __str__(self):
        return f"[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"


IDENTITY = Mat2(1, 0, 0, 1)


def m_alpha(alpha: int) -> Mat2:
    return Mat2(0, -1, 1, alpha)


def m_product(word: Iterable[int]) -> Mat2:
    """Left-to-right product ``M(w1) @ M(w2) @ ...``."""
    m11, m12, m21, m22 = 1, 0, 0, 1
    empty = True
    for x in word:
        empty = False
        # right-multiplication by M(x)
        m11, m12, m21, m22 = m12, x * m12 - m11, m22, x * m22 - m21
    if empty:
        raise ValueError("empty word")
    return Mat2(m11, m12, m21, m22)


def in_cone(m: Mat2) -> bool:
    """The inequalities satisfied by every product of letters >= 2."""
    a, b, c, d = m.a, m.b, m.c, m.d
    return 0 <= a < min(b, c) and max(b, c) < d and c - a <= d - b


def factorize(m: Mat2) -> tuple:
    """The unique word with all letters >= 2 whose product is ``m``.

    ``m`` must be unimodular with ``a, b, c, d >= 0`` and ``max(b, c) < d``;
    anything else raises :class:`FactorizationError` before any work is done.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    if m.det() != 1 or min(a, b, c, d) < 0 or max(b, c) >= d:
        raise FactorizationError("not in factorizable cone")
    return tuple(_backend.factorize_entries(a, b, c, d))


def verify_word_calculus(max_letter: int = 9, max_len: int = 8) -> dict:
    """Exhaustive check of the word identities over letters ``2..max_letter``.

    Covers every word of length ``1..max_len``: unimodularity, the cone
    inequalities, ``M(reversed w) = [[-a, -c], [b, d]]``, the condensation
    identity between overlapping determinants, and ``factorize(M(w)) == w``.
    Returns counters; every key except ``words`` should be zero.
    """
    return _backend.word_calculus_sweep(max_letter, max_len)

