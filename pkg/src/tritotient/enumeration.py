"""Exhaustive enumeration: determinant-N words, unimodular words, and counters.

Words are returned as tuples in lexicographic order.
"""
from math import comb, gcd, isqrt

from . import _backend
from .tridiag import leading_minors
from .word import ResidueClass

__all__ = [
    "enumerate_words",
    "count_words",
    "word_to_residue",
    "totient",
    "totient_scan",
    "factorint",
    "enumerate_unimodular",
    "catalan",
    "nu",
    "lattice_class_count",
    "reversal_orbits",
]


def enumerate_words(N: int, on_visit=None) -> list:
    """Every word with letters >= 2 and determinant N.

    ``on_visit(p, q)`` is called with the pair of consecutive leading minors at
    each DFS node (pure-Python path only); it exists so tests can watch the
    pruning.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    return _backend.words_with_det(N, on_visit)


def count_words(N: int) -> int:
    if N < 2:
        raise ValueError("N must be >= 2")
    return _backend.count_words_with_det(N)


def word_to_residue(word) -> ResidueClass:
    """Inverse bijection: ``(|T(w[:-1])|, |T(w)|)``, with |T(())| = 1."""
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    if min(word) < 2:
        raise ValueError("letters must be >= 2")
    minors = (1,) + leading_minors(word)
    a, N = minors[-2], minors[-1]
    # a < N already, so no reduction happens
    return ResidueClass(a % N or N, N)


def factorint(N: int) -> dict:
    """Prime factorization by trial division. Not meant for cryptographic sizes."""
    if N < 1:
        raise ValueError("N must be >= 1")
    out = {}
    for p in (2, 3):
        while N % p == 0:
            out[p] = out.get(p, 0) + 1
            N //= p
    p = 5
    limit = isqrt(N)
    while p <= limit:
        for q in (p, p + 2):
            while N % q == 0:
                out[q] = out.get(q, 0) + 1
                N //= q
                limit = isqrt(N)
        p += 6
    if N > 1:
        out[N] = out.get(N, 0) + 1
    return out


def totient(N: int) -> int:
    """Euler's phi via N * prod(1 - 1/p)."""
    result = N
    for p in factorint(N):
        result -= result // p
    return result


def totient_scan(N: int) -> int:
    if N < 1:
        raise ValueError("N must be >= 1")
    return sum(1 for k in range(1, N + 1) if gcd(k, N) == 1)


def enumerate_unimodular(n: int) -> list:
    """Length-n words (letters >= 1) with T positive definite and determinant 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _backend.unimodular_words(n)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def nu(N: int) -> int:
    """Number of x in {1, ..., N} with x^2 = 1 mod N."""
    if N < 2:
        raise ValueError("N must be >= 2")
    return sum(1 for x in range(1, N + 1) if x * x % N == 1 % N)


def lattice_class_count(N: int) -> int:
    """(phi(N) + nu(N)) / 2: words of determinant N up to reversal."""
    total = totient(N) + nu(N)
    # nu counts fixed points of a -> a^-1 on a group of order phi(N)
    assert total % 2 == 0
    return total // 2


def reversal_orbits(words) -> list:
    """Group words into classes {w, reversed w}; each class as a sorted tuple."""
    seen = set()
    classes = []
    for w in sorted(words):
        if w in seen:
            continue
        cls = tuple(sorted({w, w[::-1]}))
        seen.update(cls)
        classes.append(cls)
    return classes
