"""The word W(a, N) attached to a unit a modulo N, and statistics of it.

W(a, N) is the unique sequence of letters >= 2 with
``M(W(a, N)) = [[-x, -y], [a, N]]`` where ``y = a^-1 mod N``. Its tridiagonal
matrix has determinant N, and every such matrix arises from exactly one unit.

Residues follow the convention that ``x mod y`` lies in ``{1, ..., y}`` (the
top representative is ``y``, not 0). Every place where that matters is marked
``# mod in {1..y}``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from . import _backend

__all__ = [
    "NotInvertibleError",
    "MaterializationError",
    "ResidueClass",
    "RunWord",
    "CFrac",
    "MATERIALIZATION_CAP",
    "mod_inverse",
    "word_of",
    "word_of_fast",
    "power_sum",
    "power_sum_naive",
    "sigma",
    "cfrac",
    "sigma_table",
    "format_sigma_table",
]

MATERIALIZATION_CAP = 10**7


class NotInvertibleError(ValueError):
    pass


class MaterializationError(ValueError):
    """The word is longer than the materialization cap."""


def _mod_top(x, y):
    # mod in {1..y}
    r = x % y
    return r if r else y


@dataclass(frozen=True)
class ResidueClass:
    a: int
    N: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("N must be >= 2")
        if not 1 <= self.a <= self.N - 1:
            raise ValueError("a must lie in {1, ..., N-1}")
        if gcd(self.a, self.N) != 1:
            raise NotInvertibleError(f"{self.a} is not invertible modulo {self.N}")

    @property
    def inverse(self):
        return ResidueClass(mod_inverse(self.a, self.N), self.N)

    def __iter__(self):
        yield self.a
        yield self.N


def _residue(a, N):
    return ResidueClass(a, N)


def mod_inverse(a: int, N: int) -> int:
    """The b in {1, ..., N-1} with a*b = 1 mod N."""
    if N < 2:
        raise ValueError("N must be >= 2")
    try:
        return pow(a, -1, N)
    except ValueError:
        raise NotInvertibleError(f"{a} is not invertible modulo {N}") from None


@dataclass(frozen=True)
class RunWord:
    """Run-length encoded word: ``((letter, multiplicity), ...)``.

    Construction canonicalizes: zero-length runs are dropped and neighbouring
    runs with the same letter are merged.
    """

    runs: tuple

    def __post_init__(self):
        merged = []
        for letter, mult in self.runs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult == 0:
                continue
            if merged and merged[-1][0] == letter:
                merged[-1] = (letter, merged[-1][1] + mult)
            else:
                merged.append((letter, mult))
        object.__setattr__(self, "runs", tuple(merged))

    def __len__(self):
        return sum(m for _, m in self.runs)

    @property
    def length(self):
        return len(self)

    def __iter__(self) -> Iterator[int]:
        for letter, mult in self.runs:
            for _ in range(mult):
                yield letter

    def expand(self):
        return tuple(self)

    def power_sum(self, e):
        return sum(m * letter**e for letter, m in self.runs)

    def __str__(self):
        return ",".join(f"{letter}^{mult}" for letter, mult in self.runs)


@dataclass(frozen=True)
class CFrac:
    """Terminating continued fraction ``1/(g1 + 1/(g2 + ...))`` of a number in (0, 1)."""

    terms: tuple

    def value(self):
        x = Fraction(0)
        for g in reversed(self.terms):
            x = 1 / (g + x)
        return x

    def __str__(self):
        return ",".join(map(str, self.terms))


def word_of(a, N, cap=MATERIALIZATION_CAP) -> tuple:
    """W(a, N) as a tuple of letters.

    Built letter by letter from ``W(a, N) = W((-N) mod a, a), 1 + N//a``.
    Refuses words longer than ``cap`` with :class:`MaterializationError`; use
    :func:`word_of_fast` for those.
    """
    r = _residue(a, N)
    length = power_sum(r.a, r.N, 0)
    if length > cap:
        raise MaterializationError(
            f"W({r.a}, {r.N}) has {length} letters, above the cap of {cap}"
        )
    return tuple(_backend.euclid_word(r.a, r.N))


def word_of_fast(a, N) -> RunWord:
    """W(a, N) as runs; blocks of 2's are never expanded.

    Steps, collected from the right end of the word:
      a == 1        -> the single letter N
      a == N - 1    -> N - 1 copies of 2
      a < N/2       -> letter 1 + N//a, then (a, N) <- ((-N) mod a, a)
      a > N/2       -> lam = a // (N - a) copies of 2, then
                       (a, N) <- ((lam+1)a - lam N, lam a - (lam-1) N)
    """
    r = _residue(a, N)
    a, N = r.a, r.N
    tail = []
    while True:
        if a == 1:
            tail.append((N, 1))
            break
        if a == N - 1:
            tail.append((2, N - 1))
            break
        if 2 * a < N:
            tail.append((1 + N // a, 1))
            a, N = _mod_top(-N, a), a  # mod in {1..y}
        else:
            lam = a // (N - a)
            tail.append((2, lam))
            a, N = (lam + 1) * a - lam * N, lam * a - (lam - 1) * N
    tail.reverse()
    return RunWord(tuple(tail))


def power_sum(a, N, e) -> int:
    """Sum of ``letter**e`` over W(a, N), without materializing the word.

    ``e = 0`` gives the length of the word and ``e = 1`` the
    trace of its tridiagonal matrix. Runs in time proportional to the number
    of continued-fraction terms of a/N.
    """
    r = _residue(a, N)
    if not isinstance(e, int) or e < 0:
        raise ValueError("exponent must be a nonnegative integer")
    a, N = r.a, r.N
    total = 0
    two_e = 2**e
    while True:
        if a == 1:
            return total + N**e
        if 2 * a < N:
            total += (1 + N // a) ** e
            a, N = _mod_top(-N, a), a  # mod in {1..y}
        if a == N - 1:
            return total + (N - 1) * two_e
        if 2 * a > N:
            lam = a // (N - a)
            total += lam * two_e
            a, N = (lam + 1) * a - lam * N, lam * a - (lam - 1) * N


def power_sum_naive(a, N, e, cap=MATERIALIZATION_CAP) -> int:
    """Reference for :func:`power_sum`: sum over the materialized word."""
    return sum(x**e for x in word_of(a, N, cap=cap))


def sigma(a, N) -> int:
    """trace(T(W(a, N))) - dim(T(W(a, N)))."""
    return power_sum(a, N, 1) - power_sum(a, N, 0)


def cfrac(a, N) -> CFrac:
    """Continued fraction of a/N: g1 = floor(N/a), then recurse on (N mod a)/a."""
    r = _residue(a, N)
    a, N = r.a, r.N
    terms = []
    while a:
        q, rem = divmod(N, a)
        terms.append(q)
        a, N = rem, a
    return CFrac(tuple(terms))


def sigma_table(n_max: int) -> list:
    """Rows ``(N, [sigma(a, N) or None for a in 1..N-1])`` for N = 2..n_max."""
    rows = []
    for N in range(2, n_max + 1):
        rows.append(
            (N, [sigma(a, N) if gcd(a, N) == 1 else None for a in range(1, N)])
        )
    return rows


def format_sigma_table(n_max: int) -> str:
    """Fixed-width text table; blank cells at non-invertible a."""
    rows = sigma_table(n_max)
    width = max([len(str(n_max - 1))] + [len(str(v)) for _, r in rows for v in r if v is not None]) + 1
    label = len(f"N={n_max}:")
    lines = ["a=".ljust(label) + "".join(str(a).rjust(width) for a in range(1, n_max))]
    for N, cells in rows:
        line = f"N={N}:".ljust(label) + "".join(
            ("" if v is None else str(v)).rjust(width) for v in cells
        )
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"
