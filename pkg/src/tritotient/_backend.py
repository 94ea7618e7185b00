"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

The compiled kernels work on 64-bit integers, so each wrapper also checks that
its arguments are small enough and silently uses the Python kernel when they
are not. Results are identical either way.
"""
import math

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

__all__ = [
    "BACKEND",
    "available_backends",
    "use_backend",
    "words_with_det",
    "count_words_with_det",
    "unimodular_words",
    "euclid_word",
    "factorize_entries",
    "word_calculus_sweep",
]

BACKEND = "compiled" if _ckernels is not None else "python"

_SMALL = 1 << 31


def available_backends():
    return ("compiled", "python") if _ckernels is not None else ("python",)


def use_backend(name):
    """Select ``"compiled"`` or ``"python"``; returns the previous choice."""
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available")
    previous, BACKEND = BACKEND, name
    return previous


def _compiled():
    return BACKEND == "compiled"


def words_with_det(N, on_visit=None):
    if on_visit is None and _compiled() and N < _SMALL:
        return _ckernels.words_with_det(N)
    return _pykernels.words_with_det(N, on_visit)


def count_words_with_det(N):
    if _compiled() and N < _SMALL:
        return _ckernels.count_words_with_det(N)
    return _pykernels.count_words_with_det(N)


def unimodular_words(n):
    if _compiled() and n <= 60:
        return _ckernels.unimodular_words(n)
    return _pykernels.unimodular_words(n)


def euclid_word(a, N):
    if _compiled() and N < (1 << 62):
        return _ckernels.euclid_word(a, N)
    return _pykernels.euclid_word(a, N)


def factorize_entries(a, b, c, d):
    if _compiled() and d < _SMALL:
        try:
            return _ckernels.factorize_entries(a, b, c, d)
        except OverflowError:
            pass
    return _pykernels.factorize_entries(a, b, c, d)


def word_calculus_sweep(max_letter, max_len):
    if _compiled() and max_len <= 60 and max_len * math.log2(max_letter + 1) < 31:
        return _ckernels.word_calculus_sweep(max_letter, max_len)
    return _pykernels.word_calculus_sweep(max_letter, max_len)
