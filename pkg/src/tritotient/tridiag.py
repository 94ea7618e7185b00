"""Symmetric tridiagonal matrices T(x1, ..., xn) with unit off-diagonals."""
from dataclasses import dataclass
from typing import Sequence

__all__ = ["TriMatrix", "determinant", "leading_minors", "is_positive_definite"]


@dataclass(frozen=True)
class TriMatrix:
    diagonal: tuple

    def __post_init__(self):
        object.__setattr__(self, "diagonal", tuple(self.diagonal))
        if not self.diagonal:
            raise ValueError("empty diagonal")

    @property
    def dim(self):
        return len(self.diagonal)

    def dense(self):
        n = self.dim
        rows = [[0] * n for _ in range(n)]
        for i, x in enumerate(self.diagonal):
            rows[i][i] = x
            if i + 1 < n:
                rows[i][i + 1] = rows[i + 1][i] = 1
        return rows

    def determinant(self):
        return determinant(self.diagonal)

    def leading_minors(self):
        return leading_minors(self.diagonal)

    def is_positive_definite(self):
        return is_positive_definite(self.diagonal)


def _diag(t):
    return t.diagonal if isinstance(t, TriMatrix) else t


def leading_minors(t: "TriMatrix | Sequence[int]") -> tuple:
    """``(d1, ..., dn)`` from d_k = x_k d_{k-1} - d_{k-2}, d_0 = 1, d_-1 = 0."""
    p, q = 0, 1
    out = []
    for x in _diag(t):
        p, q = q, x * q - p
        out.append(q)
    return tuple(out)


def determinant(t: "TriMatrix | Sequence[int]") -> int:
    """Determinant of T(t); the empty word has determinant 1."""
    p, q = 0, 1
    for x in _diag(t):
        p, q = q, x * q - p
    return q


def is_positive_definite(t: "TriMatrix | Sequence[int]") -> bool:
    # Sylvester: all leading principal minors positive
    return all(m > 0 for m in leading_minors(t))
