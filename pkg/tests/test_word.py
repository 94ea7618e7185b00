from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest
from hypothesis import assume, given, strategies as st

from tritotient.sl2core import Mat2, factorize, m_product
from tritotient.tridiag import determinant
from tritotient.word import (
    CFrac,
    MaterializationError,
    NotInvertibleError,
    ResidueClass,
    RunWord,
    cfrac,
    format_sigma_table,
    mod_inverse,
    power_sum,
    power_sum_naive,
    sigma,
    sigma_table,
    word_of,
    word_of_fast,
)

DATA = Path(__file__).parent / "data"


@st.composite
def residues(draw, n_max=3000):
    N = draw(st.integers(2, n_max))
    a = draw(st.integers(1, N - 1))
    assume(gcd(a, N) == 1)
    return a, N


def euclid_cfrac(a, N):
    # oracle: floor(1/x) on exact fractions
    x = Fraction(a, N)
    terms = []
    while x:
        g = int(1 / x)
        terms.append(g)
        x = 1 / x - g
    return terms


@pytest.mark.parametrize("a, N, inv", [(1, 9, 1), (2, 5, 3), (16, 17, 16)])
def test_mod_inverse(a, N, inv):
    assert mod_inverse(a, N) == inv


def test_mod_inverse_not_invertible():
    with pytest.raises(NotInvertibleError):
        mod_inverse(6, 9)


@pytest.mark.parametrize("a, N", [(0, 5), (5, 5), (2, 1)])
def test_residue_class_bounds(a, N):
    with pytest.raises(ValueError):
        ResidueClass(a, N)


@pytest.mark.parametrize("a, N, word", [(1, 7, (7,)), (2, 5, (2, 3)), (4, 5, (2, 2, 2, 2))])
def test_word_of_examples(a, N, word, backend):
    assert word_of(a, N) == word


def test_word_of_matches_factorize():
    assert word_of(2, 5) == factorize(Mat2(-1, -3, 2, 5))


@given(residues(500))
def test_word_of_product_shape(r):
    a, N = r
    w = word_of(a, N)
    y = mod_inverse(a, N)
    x = (a * y - 1) // N
    assert min(w) >= 2
    assert m_product(w) == Mat2(-x, -y, a, N)
    assert determinant(w) == N


def test_word_of_cap():
    with pytest.raises(MaterializationError):
        word_of(10**6, 10**6 + 1, cap=1000)


def test_word_of_fast_long_run():
    N = 10**6 + 3
    assert word_of_fast(N - 1, N).runs == ((2, N - 1),)


@pytest.mark.parametrize("a, N, runs", [(2, 5, ((2, 1), (3, 1))), (1, 11, ((11, 1),))])
def test_word_of_fast_examples(a, N, runs):
    assert word_of_fast(a, N).runs == runs


@given(residues())
def test_word_of_fast_expands(r):
    assert word_of_fast(*r).expand() == word_of(*r)


def test_runword_canonical():
    rw = RunWord(((2, 1), (2, 3), (5, 0), (3, 1)))
    assert rw.runs == ((2, 4), (3, 1))
    assert str(rw) == "2^4,3^1"
    assert len(rw) == 5
    assert rw.power_sum(1) == 11


@pytest.mark.parametrize("a, N, e, value", [(1, 7, 0, 1), (6, 7, 0, 6), (4, 5, 1, 8)])
def test_power_sum_examples(a, N, e, value):
    assert power_sum(a, N, e) == value


@given(residues(), st.integers(0, 4))
def test_power_sum_matches_naive(r, e):
    assert power_sum(*r, e) == power_sum_naive(*r, e)


def test_power_sum_big_constant_run():
    N = (1 << 255) + 95
    assert power_sum(N - 1, N, 3) == (N - 1) * 8


@pytest.mark.parametrize("a, N, value", [(2, 5, 3), (8, 17, 9), (1, 2, 1)])
def test_sigma_examples(a, N, value):
    assert sigma(a, N) == value


@given(residues())
def test_sigma_symmetry(r):
    a, N = r
    assert sigma(a, N) == sigma(N - a, N)


@given(residues())
def test_inverse_reverses_word(r):
    a, N = r
    assert word_of(mod_inverse(a, N), N) == word_of(a, N)[::-1]


@pytest.mark.parametrize("a, N, terms", [(1, 13, (13,)), (2, 5, (2, 2)), (4, 5, (1, 4))])
def test_cfrac_examples(a, N, terms):
    assert cfrac(a, N).terms == terms


@given(residues())
def test_cfrac_against_oracle(r):
    a, N = r
    cf = cfrac(a, N)
    assert list(cf.terms) == euclid_cfrac(a, N)
    assert cf.value() == Fraction(a, N)
    assert 1 + sigma(a, N) == sum(cf.terms)


def test_cfrac_str():
    assert str(CFrac((2, 2, 3))) == "2,2,3"


def test_sigma_table_cells_match_golden():
    rows = dict(sigma_table(17))
    for line in (DATA / "sigma_table_17.csv").read_text().splitlines():
        N, *cells = line.split(",")
        expected = [int(c) if c else None for c in cells]
        assert rows[int(N)] == expected


def test_sigma_table_text_matches_golden():
    assert format_sigma_table(17) == (DATA / "sigma_table_17.txt").read_text()
