import itertools

import pytest
from hypothesis import given, strategies as st

from tritotient.sl2core import (
    FactorizationError,
    Mat2,
    factorize,
    in_cone,
    m_alpha,
    m_product,
    verify_word_calculus,
)

words = st.lists(st.integers(2, 12), min_size=1, max_size=12).map(tuple)


def naive_product(word):
    # oracle: explicit 2x2 multiplication with nested lists
    acc = [[1, 0], [0, 1]]
    for x in word:
        m = [[0, -1], [1, x]]
        acc = [[sum(acc[i][k] * m[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    return acc


@pytest.mark.parametrize("alpha, rows", [
    (0, ((0, -1), (1, 0))),
    (2, ((0, -1), (1, 2))),
    (-3, ((0, -1), (1, -3))),
])
def test_m_alpha(alpha, rows):
    assert m_alpha(alpha).rows() == rows


@pytest.mark.parametrize("k", [1, 2, 3, 4, 10])
def test_product_of_twos(k):
    assert m_product((2,) * k) == Mat2(1 - k, -k, k, k + 1)


@pytest.mark.parametrize("x, y", [(2, 3), (5, 7), (-1, 4), (0, 0)])
def test_product_of_two_letters(x, y):
    assert m_product((x, y)) == Mat2(-1, -y, x, x * y - 1)


def test_m_product_small():
    assert m_product((2, 3)) == Mat2(-1, -3, 2, 5)


def test_m_product_empty():
    with pytest.raises(ValueError, match="empty word"):
        m_product(())


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=10))
def test_m_product_matches_naive(word):
    m = m_product(word)
    assert [list(r) for r in m.rows()] == naive_product(word)
    assert m.det() == 1


def test_mat2_matmul_and_inverse():
    m = m_product((3, 2, 5))
    assert m @ m.inverse() == Mat2(1, 0, 0, 1)
    assert m_product((3,)) @ m_product((2, 5)) == m


@pytest.mark.parametrize("m, word", [
    (Mat2(0, -1, 1, 5), (5,)),
    (Mat2(-1, -3, 2, 5), (2, 3)),
    (Mat2(-3, -4, 4, 5), (2, 2, 2, 2)),
])
def test_factorize_examples(m, word, backend):
    assert factorize(m) == word


@pytest.mark.parametrize("m", [
    Mat2(-1, -3, 2, 6),      # det != 1
    Mat2(0, -1, 1, 1),       # max(b, c) == d
    Mat2(1, -1, 1, 0),       # negative a after sign flip
    Mat2(-1, -5, 1, 4),      # b > d
])
def test_factorize_rejects(m):
    with pytest.raises(FactorizationError, match="not in factorizable cone"):
        factorize(m)


@given(words)
def test_factorize_roundtrip(word):
    assert factorize(m_product(word)) == word


@given(words)
def test_cone(word):
    assert in_cone(m_product(word))


@given(words)
def test_reversal(word):
    m = m_product(word)
    assert m_product(word[::-1]) == Mat2.from_abcd(m.a, m.c, m.b, m.d)


def test_cone_rejects_letter_one():
    assert not in_cone(m_product((1, 3)))


def test_word_calculus_small(backend):
    stats = verify_word_calculus(5, 5)
    assert stats["words"] == sum(4**k for k in range(1, 6))
    assert all(v == 0 for k, v in stats.items() if k != "words")


def test_word_calculus_sweep_matches_direct_checks():
    # independent re-check of the sweep on a small box with direct products
    for n in range(1, 5):
        for w in itertools.product(range(2, 6), repeat=n):
            m = m_product(w)
            assert in_cone(m) and factorize(m) == w
