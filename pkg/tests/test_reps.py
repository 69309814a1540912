import itertools

import numpy as np
import pytest

from trihedral.exact_arith import LaurentPoly, quantum_factorial
from trihedral.hecke import basis, basis_product, bs_expansion, dimension
from trihedral.koornwinder import vanishing_set, zeta_orbits
from trihedral.reps import (
    Character, SAMPLE_V, base_change_certificate, character_is_rep, characters, equivalent,
    eigen_triple, is_simple, kl_matrix, relations_hold, simple_table, three_dim,
    three_dim_is_rep, zeta,
)

Q3F = quantum_factorial(3)
ZERO = LaurentPoly()


def test_character_examples():
    assert all(character_is_rep(Character(ZERO, ZERO, ZERO), e) for e in range(7))
    assert character_is_rep(Character(Q3F, ZERO, ZERO), 3)
    assert not character_is_rep(Character(Q3F, ZERO, ZERO), 1)
    assert not any(character_is_rep(Character(Q3F, Q3F, Q3F), e) for e in range(7))
    assert not character_is_rep(Character(Q3F, Q3F, ZERO), 3)


@pytest.mark.parametrize("e", [0, 1, 2, 3, 4, 5, 6])
def test_character_table(e):
    got = sorted(c.short() for c in characters(e))
    if e % 3 == 0:
        want = [("0", "0", "0"), ("0", "0", "[3]!"), ("0", "[3]!", "0"), ("[3]!", "0", "0")]
    else:
        want = [("0", "0", "0")]
    assert got == want


def test_three_dim_examples():
    assert three_dim_is_rep(1, 1)
    assert not three_dim_is_rep(1, 2)
    assert three_dim_is_rep(0, 3)
    assert not is_simple(0)


@pytest.mark.parametrize("e", range(6))
def test_roots_give_representations(e):
    for pt in vanishing_set(e):
        rep = three_dim(pt.z)
        assert relations_hold(rep, 1e-8)
        mats = rep.matrices(SAMPLE_V[0])
        for u in "gop":
            assert sum(np.abs(row).max() > 0 for row in mats[u]) == 1


def test_equivalence():
    z = vanishing_set(2)[1].z
    zt = zeta()
    assert equivalent(z, z)
    assert equivalent(z, zt * z)
    assert base_change_certificate(z, zt * z) is not None
    assert equivalent(z, z / zt)
    orbits = zeta_orbits(2)
    a, b = orbits[0][0].z, orbits[1][0].z
    assert not equivalent(a, b)
    ta = sorted(eigen_triple(a, 1.3), key=lambda c: (round(c.real, 6), round(c.imag, 6)))
    tb = sorted(eigen_triple(b, 1.3), key=lambda c: (round(c.real, 6), round(c.imag, 6)))
    assert max(abs(x - y) for x, y in zip(ta, tb)) > 1e-3


@pytest.mark.parametrize("e", range(6))
def test_eigen_triple(e):
    for pt in vanishing_set(e):
        for v in SAMPLE_V:
            mats = three_dim(pt.z).matrices(v)
            ev = np.linalg.eigvals(mats["g"] + mats["o"] + mats["p"])
            want = list(eigen_triple(pt.z, v))
            for x in ev:
                i = min(range(len(want)), key=lambda j: abs(want[j] - x))
                assert abs(want[i] - x) < 1e-8 * max(1, abs(x))
                want.pop(i)


def test_zero_point_decomposes():
    # at z = 0 each coordinate line is invariant and carries one nonzero character
    mats = three_dim(0).matrices(2.0)
    q3f = Q3F.eval(2.0)
    for i, u in enumerate("gop"):
        for w in "gop":
            m = mats[w]
            assert np.allclose(np.delete(m[:, i], i), 0)
            assert np.isclose(m[i, i], q3f if w == u else 0)


@pytest.mark.parametrize("e", range(13))
def test_simple_table(e):
    tab = simple_table(e)
    te = (e + 1) * (e + 2) // 2
    if e % 3 == 0:
        assert (tab["one_dim_count"], tab["three_dim_count"]) == (4, (te - 1) // 3)
    else:
        assert (tab["one_dim_count"], tab["three_dim_count"]) == (1, te // 3)
    assert tab["sum_of_squares"] == dimension(e)
    known = {1: (1, 1, 10), 3: (4, 3, 31), 6: (4, 9, 85)}
    if e in known:
        assert tuple(tab.values()) == known[e]


@pytest.mark.parametrize("e", [1, 2, 3])
def test_three_dim_homomorphism(e):
    labels = basis(e)
    for pt in vanishing_set(e):
        rep = three_dim(pt.z)
        v = SAMPLE_V[0]

        def act(lab):
            if lab == "1":
                return np.eye(3)
            return kl_matrix(rep, lab.m, lab.n, lab.u, v)[0]

        acts = {lab: act(lab) for lab in labels}
        for a, b in itertools.product(labels, repeat=2):
            lhs = sum((c.eval(v) * acts[lab] for lab, c in basis_product(a, b, e).items()),
                      np.zeros((3, 3)))
            rhs = acts[a] @ acts[b]
            assert np.abs(lhs - rhs).max() <= 1e-8 * max(1, np.abs(rhs).max())


def test_kl_words_end_in_right_color():
    assert all(w[-1] == "p" for w, _ in bs_expansion(2, 1, "p"))
