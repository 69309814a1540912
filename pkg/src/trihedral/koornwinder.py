"""The sl3 Chebyshev-like polynomials p(m,n) in X, Y, their common zeros at a
given level, the Z/3 action on those zeros and the (x, y) = (XY, Y^3)
rewriting used by the classification."""

from dataclasses import dataclass
from functools import lru_cache
import cmath
import math

from .exact_arith import BivarPoly, DEFAULT_TOL
from .sl3_fusion import weights_by_degree

X = BivarPoly.var(0)
Y = BivarPoly.var(1)


@lru_cache(maxsize=None)
def chebyshev_sl3(m, n):
    """p(m,n) from the recursions
    X p(m,n) = p(m+1,n) + p(m-1,n+1) + p(m,n-1) and its Y mirror."""
    if m < 0 or n < 0:
        return BivarPoly()
    if (m, n) == (0, 0):
        return BivarPoly.const(1)
    if m > 0:
        return X * chebyshev_sl3(m - 1, n) - chebyshev_sl3(m - 2, n + 1) - chebyshev_sl3(m - 1, n - 1)
    # m == 0: Y p(0,n-1) = p(0,n) + p(1,n-2) + p(-1,n-1)
    return Y * chebyshev_sl3(0, n - 1) - chebyshev_sl3(1, n - 2)


def vanishing_generators(e):
    """The e+2 polynomials p(m,n) with m+n = e+1, m descending."""
    return [chebyshev_sl3(m, n) for m, n in weights_by_degree(e + 1)]


def t(e):
    return (e + 1) * (e + 2) // 2


def z_value(sigma, tau):
    return cmath.exp(1j * sigma) + cmath.exp(-1j * tau) + cmath.exp(1j * (tau - sigma))


@dataclass(frozen=True)
class VanishingPoint:
    k: int
    l: int
    e: int

    @property
    def angles(self):
        d = 3 * (self.e + 3)
        return (2 * math.pi * (2 * self.k + self.l + 3) / d,
                2 * math.pi * (self.k + 2 * self.l + 3) / d)

    @property
    def z(self):
        return z_value(*self.angles)

    def to_json(self):
        z = self.z
        return {"k": self.k, "l": self.l, "z": [_round(z.real), _round(z.imag)]}


def _round(x, digits=12):
    r = round(x, digits)
    return 0.0 if r == 0 else r


def vanishing_set(e):
    """The t_e points (z, conj z) where every p(m,n) with m+n = e+1 vanishes."""
    return [VanishingPoint(k, l, e) for s in range(e + 1) for k, l in
            sorted(((k, s - k) for k in range(s + 1)))]


def zeta_map(pt):
    return VanishingPoint(pt.e - pt.k - pt.l, pt.k, pt.e)


def zeta_certificate(e, tol=DEFAULT_TOL):
    """Check that the index map multiplies every z by the same primitive cube
    root of unity; returns (ok, zeta, max error)."""
    zeta = cmath.exp(2j * math.pi / 3)
    worst = {zeta: 0.0, zeta.conjugate(): 0.0}
    for pt in vanishing_set(e):
        for cand in worst:
            worst[cand] = max(worst[cand], abs(zeta_map(pt).z - cand * pt.z))
    best = min(worst, key=worst.get)
    return worst[best] <= tol, best, worst[best]


def zeta_orbits(e):
    """Orbits of the vanishing set under (k,l) -> (e-k-l, k), deterministic order."""
    seen, orbits = set(), []
    for pt in vanishing_set(e):
        if (pt.k, pt.l) in seen:
            continue
        orbit, q = [], pt
        while (q.k, q.l) not in seen:
            seen.add((q.k, q.l))
            orbit.append(q)
            q = zeta_map(q)
        orbits.append(orbit)
    return orbits


def rewrite_poly(p):
    """Multiply by the least Y^t turning p into a polynomial in x = XY, y = Y^3."""
    diffs = {a - b for a, b in p.coeffs}
    residues = {d % 3 for d in diffs}
    if len(residues) != 1:
        raise ValueError(f"{p} is not homogeneous for the Z/3 grading")
    r = residues.pop()
    tpow = max(max(diffs), 0)
    while tpow % 3 != r:
        tpow += 1
    out = {}
    for (a, b), c in p.coeffs.items():
        rest = b + tpow - a
        if rest < 0 or rest % 3:
            raise ValueError(f"{p} cannot be written in x, y")
        out[(a, rest // 3)] = c
    return tpow, BivarPoly(out)


def rewrite_in_xy(e):
    return [rewrite_poly(p)[1] for p in vanishing_generators(e)]
