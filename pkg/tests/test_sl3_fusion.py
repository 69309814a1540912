from collections import Counter
import math

import pytest
from hypothesis import given, settings, strategies as st

from trihedral.sl3_fusion import (
    central_character, d_coefficients, decompose_monomial, qdim, rotate, tensor_X, tensor_Y,
)

decs = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(1, 3),
                       min_size=1, max_size=4).map(Counter)


def test_tensor_examples():
    assert tensor_X(Counter({(0, 0): 1})) == Counter({(1, 0): 1})
    assert tensor_X(Counter({(1, 1): 1})) == Counter({(2, 1): 1, (0, 2): 1, (1, 0): 1})
    assert tensor_Y(Counter({(1, 0): 1})) == Counter({(1, 1): 1, (0, 0): 1})


@settings(max_examples=100, deadline=None)
@given(decs)
def test_tensor_commutes(dec):
    assert tensor_X(tensor_Y(dec)) == tensor_Y(tensor_X(dec))


def test_decompose_monomial_examples():
    assert decompose_monomial(0, 0) == Counter({(0, 0): 1})
    assert decompose_monomial(1, 1) == Counter({(1, 1): 1, (0, 0): 1})
    assert decompose_monomial(2, 0) == Counter({(2, 0): 1, (0, 1): 1})


def _weyl_dim(m, n):
    return (m + 1) * (n + 1) * (m + n + 2) // 2


@pytest.mark.parametrize("k,l", [(k, l) for k in range(5) for l in range(5)])
def test_monomial_dimension_and_character(k, l):
    dec = decompose_monomial(k, l)
    assert sum(_weyl_dim(*w) * c for w, c in dec.items()) == 3 ** (k + l)
    assert {central_character(*w) for w in dec} == {central_character(k, l)}


def test_d_coefficient_examples():
    assert d_coefficients(1, 1) == {(1, 1): 1, (0, 0): -1}
    assert d_coefficients(0, 0) == {(0, 0): 1}
    assert d_coefficients(2, 2) == {(2, 2): 1, (3, 0): -1, (0, 3): -1}


@pytest.mark.parametrize("m,n", [(m, s - m) for s in range(9) for m in range(s + 1)])
def test_d_coefficients_structure(m, n):
    d = d_coefficients(m, n)
    assert d[(m, n)] == 1
    assert all(k + l <= m + n and (k - l - m + n) % 3 == 0 for k, l in d)
    assert d == {(l, k): c for (k, l), c in d_coefficients(n, m).items()}
    # inverting back: sum d[kl] [X^k Y^l] is exactly L(m,n)
    total = Counter()
    for (k, l), c in d.items():
        for w, mult in decompose_monomial(k, l).items():
            total[w] += c * mult
    assert {w: c for w, c in total.items() if c} == {(m, n): 1}


def test_central_character():
    assert central_character(1, 0) == "o"
    assert central_character(0, 0) == "g"
    assert central_character(0, 1) == "p"
    assert rotate("g") == "o" and rotate("p") == "g" and rotate("o", -1) == "g"
    assert all(rotate(c, 3) == c for c in "gop")


def test_qdim():
    for e in range(8):
        assert qdim(0, 0, e) == 1
    assert math.isclose(qdim(1, 0, 3), 2, abs_tol=1e-12)
    assert math.isclose(qdim(1, 1, 3), 3, abs_tol=1e-12)
    with pytest.raises(ValueError):
        qdim(2, 2, 3)


@pytest.mark.parametrize("e", range(1, 9))
def test_qdim_positive(e):
    assert all(qdim(m, s - m, e) > 0 for s in range(e + 1) for m in range(s + 1))
