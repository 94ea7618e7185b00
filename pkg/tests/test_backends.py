import itertools
from math import gcd

import pytest

from tritotient import _backend, _pykernels
from tritotient.sl2core import m_product

compiled_only = pytest.mark.skipif(
    "compiled" not in _backend.available_backends(), reason="extension not built"
)


def under(name, fn, *args):
    prev = _backend.use_backend(name)
    try:
        return fn(*args)
    finally:
        _backend.use_backend(prev)


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        _backend.use_backend("fortran")


@compiled_only
@pytest.mark.parametrize("N", [2, 3, 10, 97, 360, 1009])
def test_words_with_det_agree(N):
    assert under("compiled", _backend.words_with_det, N) == _pykernels.words_with_det(N)
    assert under("compiled", _backend.count_words_with_det, N) == _pykernels.count_words_with_det(N)


@compiled_only
@pytest.mark.parametrize("n", range(1, 10))
def test_unimodular_agree(n):
    assert under("compiled", _backend.unimodular_words, n) == _pykernels.unimodular_words(n)


@compiled_only
def test_euclid_and_factorize_agree():
    for N in range(2, 120):
        for a in range(1, N):
            if gcd(a, N) == 1:
                w = under("compiled", _backend.euclid_word, a, N)
                assert w == _pykernels.euclid_word(a, N)
    for w in itertools.product(range(2, 6), repeat=5):
        m = m_product(w)
        args = (m.a, m.b, m.c, m.d)
        assert tuple(under("compiled", _backend.factorize_entries, *args)) == w
        assert tuple(_pykernels.factorize_entries(*args)) == w


@compiled_only
def test_sweep_agrees():
    assert under("compiled", _backend.word_calculus_sweep, 6, 5) == _pykernels.word_calculus_sweep(6, 5)


def test_large_inputs_fall_back():
    # beyond 64-bit ranges the wrappers route to the Python kernels
    N = 2**70 + 1
    assert list(_backend.euclid_word(1, N)) == [N]
    w = (2**40, 3)
    m = m_product(w)
    assert tuple(_backend.factorize_entries(m.a, m.b, m.c, m.d)) == w
    long_word = (2,) * 300
    m = m_product(long_word)
    assert tuple(_backend.factorize_entries(m.a, m.b, m.c, m.d)) == long_word
