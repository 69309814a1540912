import itertools

import numpy as np
import pytest

from trihedral.classify import iso_tricolored, tricoloring_count
from trihedral.exact_arith import ExactMatrix, LaurentPoly, quantum_factorial, quantum_integer
from trihedral.graphs import (
    C_LEVELS, E_NAMES, TricoloredGraph, annihilation_test, bundled_graphs, check_relations,
    is_admissible, is_quasi_regular, is_strongly_connected, kl_action, kl_positivity, m_gamma,
    special_triangle, spectrum, spectrum_check, type_A, type_C, type_D, type_D_counting, type_E,
)
from trihedral.hecke import UNIT, basis, basis_product
from trihedral.sl3_fusion import qdim

Q2 = quantum_integer(2)
Q3 = quantum_integer(3)
ALL = bundled_graphs()
IDS = [g.name for g in ALL]


def L(x):
    return LaurentPoly.const(x) if isinstance(x, int) else x


def lmat(rows):
    return ExactMatrix([[L(x) for x in r] for r in rows])


def roots_match(eig, poly, tol=1e-6):
    want = list(np.roots(poly))
    for x in eig:
        i = min(range(len(want)), key=lambda j: abs(want[j] - x))
        if abs(want[i] - x) > tol:
            return False
        want.pop(i)
    return not want


def test_type_A_examples():
    a2 = type_A(2)
    assert (a2.A, a2.B, a2.C) == (((1, 1), (0, 1)), ((1, 1), (1, 0)), ((1, 0), (1, 1)))
    a1 = type_A(1)
    assert (a1.A, a1.B, a1.C) == (((1,),), ((1,),), ((1,),))
    a0 = type_A(0)
    assert a0.sizes == (1, 0, 0) and is_admissible(a0) and is_quasi_regular(a0)
    assert type_A(0, "o").sizes == (0, 1, 0)


def test_weakly_regular_example():
    gr = TricoloredGraph.from_blocks([[1], [1]], [[1, 0], [0, 1]], [[1, 1]], (1, 2, 2))
    assert not is_quasi_regular(gr)
    assert is_strongly_connected(gr)
    with pytest.raises(ValueError):
        m_gamma(gr)


@pytest.mark.parametrize("e", range(7))
def test_type_A_admissible(e):
    for corner in "gop":
        gr = type_A(e, corner)
        assert is_admissible(gr)
        assert gr.n == (e + 1) * (e + 2) // 2


def test_type_D():
    d3 = type_D(3)
    assert d3.n == 6 and sorted(d3.sizes) == [1, 1, 4]
    assert d3.sizes[0] == 4
    # the double edge joins the two vertices off the corner color
    assert d3.B == ((2,),) and max(max(r) for r in d3.A + d3.C) == 1
    assert type_D(6).n == 12
    assert roots_match(spectrum(d3), np.polymul([1, -2, 0, 0, 0], [1, 2, 4]))
    for bad in (0, 4):
        with pytest.raises(ValueError):
            type_D(bad)


def test_type_C_and_E():
    c3 = type_C(3)
    assert c3.sizes == (2, 2, 2)
    assert max(max(r) for r in c3.A + c3.B + c3.C) == 1
    assert roots_match(spectrum(c3), np.polymul([1, -2, 0, 0, 0], [1, 2, 4]))
    assert iso_tricolored(type_C(1), type_A(1))
    assert type_E("E5").sizes == (4, 4, 4) and type_E("E5").level == 5
    with pytest.raises(ValueError):
        type_C(6)
    with pytest.raises(ValueError):
        type_E("E7")


def test_type_C_is_not_type_D():
    assert not iso_tricolored(type_D(3), type_C(3))


@pytest.mark.parametrize("gr", ALL, ids=IDS)
def test_bundled_certificates(gr):
    assert is_admissible(gr)
    ok, cert = annihilation_test(gr, gr.level)
    assert ok and all(c["max_abs"] == 0 for c in cert)
    assert spectrum_check(gr, gr.level)["ok"]
    X = gr.adjacency_X()
    assert X * X.T == X.T * X
    assert check_relations(m_gamma(gr))


@pytest.mark.parametrize("gr", ALL, ids=IDS)
def test_bundled_kl_positivity(gr):
    # full level on the small graphs; the large ones take minutes, so stop at m+n <= 4
    assert kl_positivity(gr, gr.level if gr.n <= 12 else min(gr.level, 4))


def test_annihilation_examples():
    assert annihilation_test(type_A(3), 3)[0]
    assert not annihilation_test(type_A(3), 2)[0]
    assert annihilation_test(special_triangle(), 3)[0]
    assert is_admissible(special_triangle())


def test_spectrum_examples():
    poly = np.polymul(np.polymul([1, 0], [1, -2]), np.polymul([1, 2, 4], [1, 0, 0, -1, 0, 0, 1]))
    assert roots_match(spectrum(type_A(3)), poly)
    assert roots_match(spectrum(type_A(1)), [1, 0, 0, -1])
    rep = spectrum_check(type_D(3), 3)
    assert rep["ok"] and rep["family"] == "D"


def test_m_gamma_examples():
    rep = m_gamma(type_A(1))
    assert rep.g == lmat([[Q3, 1, 1], [0, 0, 0], [0, 0, 0]]).scale(Q2)
    gr = type_A(3)
    rep = m_gamma(gr)
    total = rep.g + rep.o + rep.p
    adj = gr.adjacency().map(LaurentPoly.const)
    assert total == (ExactMatrix.identity(gr.n, Q3, LaurentPoly()) + adj).scale(Q2)


def test_small_triangle_matrix():
    want = lmat([[0] * 6] * 4 + [[0, Q3, 1, 1, 1, 1], [Q3, 0, 1, 0, 1, 0]]).scale(Q2)
    assert kl_action(type_A(2), 2, 0, "g") == want
    for u in "gop":
        assert kl_action(type_A(2), 0, 0, u) == m_gamma(type_A(2))[u]


@pytest.mark.parametrize("e", [0, 1, 2, 3])
def test_graph_rep_is_homomorphism(e):
    gr = type_A(e)
    n = gr.n
    ident = ExactMatrix.identity(n, LaurentPoly.const(1), LaurentPoly())

    def act(lab):
        return ident if lab == UNIT else kl_action(gr, lab.m, lab.n, lab.u)

    acts = {lab: act(lab) for lab in basis(e)}
    for a, b in itertools.product(basis(e), repeat=2):
        lhs = ExactMatrix.zeros(n, n, LaurentPoly())
        for lab, c in basis_product(a, b, e).items():
            lhs = lhs + acts[lab].scale(c.as_laurent())
        assert lhs == acts[a] * acts[b], (a, b)


def test_tricoloring_counts():
    for e in range(7):
        assert tricoloring_count(type_A(e)) == (3 if e % 3 == 0 else 1)
    assert tricoloring_count(type_D(3)) == 3
    assert tricoloring_count(type_D(6)) == 3
    assert tricoloring_count(type_C(3)) == 1
    assert tricoloring_count(type_E("E5")) == 1
    for name in E_NAMES[1:]:
        assert tricoloring_count(type_E(name)) == 3


def test_type_D_counting():
    rep = type_D_counting(3)
    assert rep["rank"] == 6 == type_D(3).n
    assert sorted(round(q, 9) for q in rep["module_qdims"]) == [3, 3, 3, 3, 6, 6]
    assert abs(rep["lhs"] - rep["rhs"]) < 1e-8
    assert type_D_counting(6)["rank"] == 12 == type_D(6).n
    assert abs(qdim(1, 1, 3) - 3) < 1e-12
    with pytest.raises(ValueError):
        type_D_counting(4)


def test_json_roundtrip():
    for gr in ALL:
        back = TricoloredGraph.from_json(gr.to_json())
        assert back == gr
        assert set(gr.to_json()) == {"name", "level", "green", "orange", "purple", "A", "B", "C"}


def test_names():
    assert len(ALL) == 9 + 2 + len(C_LEVELS) + len(E_NAMES)
