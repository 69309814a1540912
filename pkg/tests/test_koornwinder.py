import itertools

import numpy as np
import pytest

from trihedral.exact_arith import BivarPoly
from trihedral.koornwinder import (
    chebyshev_sl3, rewrite_in_xy, rewrite_poly, t, vanishing_generators, vanishing_set,
    zeta_certificate, zeta_map, zeta_orbits,
)
from trihedral.sl3_fusion import d_coefficients

P = BivarPoly.parse


def test_polynomial_examples():
    assert chebyshev_sl3(2, 0) == P("X^2 - Y")
    assert chebyshev_sl3(0, 0) == P("1")
    assert chebyshev_sl3(2, 2) == P("X^2Y^2 - X^3 - Y^3")


@pytest.mark.parametrize("m,n", [(m, s - m) for s in range(9) for m in range(s + 1)])
def test_recursion_matches_fusion_and_symmetry(m, n):
    p = chebyshev_sl3(m, n)
    assert p.is_integral()
    assert {k: int(c) for k, c in p.coeffs.items()} == d_coefficients(m, n)
    assert p.swap() == chebyshev_sl3(n, m)


@pytest.mark.parametrize("m,n", [(m, s - m) for s in range(11) for m in range(s + 1)])
def test_constant_term(m, n):
    c = chebyshev_sl3(m, n).constant_term()
    if m % 3 == 0 and n % 3 == 0:
        assert c == 1
    elif m % 3 == 1 and n % 3 == 1:
        assert c == -1
    else:
        assert c == 0


def test_vanishing_generators():
    assert vanishing_generators(0) == [P("X"), P("Y")]
    assert vanishing_generators(1) == [P("X^2 - Y"), P("XY - 1"), P("Y^2 - X")]
    gens = vanishing_generators(3)
    assert len(gens) == 5 and gens[0] == P("X^4 - 3X^2Y + Y^2 + 2X")


@pytest.mark.parametrize("e", range(11))
def test_vanishing_set(e):
    pts = vanishing_set(e)
    assert len(pts) == t(e)
    zs = [p.z for p in pts]
    for a, b in itertools.combinations(zs, 2):
        assert abs(a - b) > 1e-6
    for g in vanishing_generators(e):
        for z in zs:
            assert abs(g.eval(z, z.conjugate())) < 1e-8
    assert all(abs(z) <= 3 + 1e-12 for z in zs)


def _same_multiset(a, b, tol=1e-8):
    b = list(b)
    for x in a:
        i = min(range(len(b)), key=lambda j: abs(b[j] - x))
        if abs(b[i] - x) > tol:
            return False
        b.pop(i)
    return not b


def test_root_examples():
    assert _same_multiset([p.z for p in vanishing_set(1)], np.roots([1, 0, 0, -1]))
    poly3 = np.polymul(np.polymul([1, 0], [1, -2]), np.polymul([1, 2, 4], [1, 0, 0, -1, 0, 0, 1]))
    assert _same_multiset([p.z for p in vanishing_set(3)], np.roots(poly3))
    assert abs(vanishing_set(0)[0].z) < 1e-12


@pytest.mark.parametrize("e", range(11))
def test_zeta_orbits(e):
    ok, zeta, err = zeta_certificate(e)
    assert ok and abs(zeta ** 3 - 1) < 1e-12 and abs(zeta - 1) > 0.5
    orbits = zeta_orbits(e)
    sizes = sorted(len(o) for o in orbits)
    if e % 3 == 0:
        assert sizes == [1] + [3] * ((t(e) - 1) // 3)
        (fixed,) = [o[0] for o in orbits if len(o) == 1]
        assert (fixed.k, fixed.l) == (e // 3, e // 3) and abs(fixed.z) < 1e-12
    else:
        assert sizes == [3] * (t(e) // 3)
    for o in orbits:
        assert zeta_map(o[-1]) == o[0]


def test_rewrite():
    assert rewrite_poly(P("XY - 1")) == (0, P("X - 1"))
    assert rewrite_poly(P("Y")) == (2, P("Y"))
    with pytest.raises(ValueError):
        rewrite_poly(P("X + Y"))
    for e in range(6):
        assert len(rewrite_in_xy(e)) == e + 2


def test_json_shape():
    d = vanishing_set(1)[0].to_json()
    assert set(d) == {"k", "l", "z"} and len(d["z"]) == 2
    assert abs(complex(*d["z"]) ** 3 - 1) < 1e-9
