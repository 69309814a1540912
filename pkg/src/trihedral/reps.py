"""Simple representations of the level-e trihedral Hecke algebra: the
one-dimensional characters and the three-dimensional family M(z)."""

from dataclasses import dataclass
from itertools import product
import cmath

import numpy as np

from .exact_arith import FracLaurent, LaurentPoly, quantum_factorial, quantum_integer, DEFAULT_TOL
from .hecke import bs_expansion, dimension, t
from .koornwinder import vanishing_set, zeta_orbits, zeta_certificate
from .sl3_fusion import COLORS, weights_by_degree

Q3F = quantum_factorial(3)
SAMPLE_V = (1.3, 2.0)


@dataclass(frozen=True)
class Character:
    g: LaurentPoly
    o: LaurentPoly
    p: LaurentPoly

    def value(self, u):
        return getattr(self, u)

    def short(self):
        return tuple("[3]!" if self.value(u) else "0" for u in COLORS)


def all_candidate_characters():
    zero = LaurentPoly()
    return [Character(*vals) for vals in product((zero, Q3F), repeat=3)]


def _eval_word(c, word):
    out = FracLaurent.coerce(1)
    for u in word:
        out = out * c.value(u)
    return out


def character_is_rep(c, e):
    for u in COLORS:
        x = c.value(u)
        if x * x != Q3F * x:
            return False
    for u, v, w in ((a, b, d) for a in COLORS for b in COLORS for d in COLORS if len({a, b, d}) == 3):
        if c.value(u) * c.value(v) * c.value(u) != c.value(u) * c.value(w) * c.value(u):
            return False
    for m, n in weights_by_degree(e + 1):
        for u in COLORS:
            total = FracLaurent.coerce(0)
            for word, coeff in bs_expansion(m, n, u):
                total = total + coeff * _eval_word(c, word)
            if not total.is_laurent():
                raise ArithmeticError("character value kept a [2] denominator")
            if total:
                return False
    return True


def characters(e):
    return [c for c in all_candidate_characters() if character_is_rep(c, e)]


@dataclass(frozen=True)
class ThreeDimRep:
    """M(z): theta_u acts by [2] times a matrix with one nonzero row."""
    z: complex

    def matrices(self, v):
        q2 = quantum_integer(2).eval(v)
        q3 = quantum_integer(3).eval(v)
        z, zb = self.z, self.z.conjugate()
        mg = np.zeros((3, 3), complex)
        mo = np.zeros((3, 3), complex)
        mp = np.zeros((3, 3), complex)
        mg[0] = (q3, zb, z)
        mo[1] = (z, q3, zb)
        mp[2] = (zb, z, q3)
        return {"g": q2 * mg, "o": q2 * mo, "p": q2 * mp}


def three_dim(z):
    return ThreeDimRep(complex(z))


def _word_matrix(mats, word):
    out = np.eye(3, dtype=complex)
    for u in word:
        out = out @ mats[u]
    return out


def kl_matrix(rep, m, n, u, v):
    mats = rep.matrices(v)
    total = np.zeros((3, 3), complex)
    scale = 0.0
    for word, coeff in bs_expansion(m, n, u):
        c = complex(coeff.eval(v))
        wm = _word_matrix(mats, word)
        total += c * wm
        scale += abs(c) * np.abs(wm).max()
    return total, max(scale, 1.0)


def relations_hold(rep, tol=1e-8):
    for v in SAMPLE_V:
        mats = rep.matrices(v)
        q3f = Q3F.eval(v)
        for u in COLORS:
            if np.abs(mats[u] @ mats[u] - q3f * mats[u]).max() > tol * max(1, np.abs(mats[u]).max() ** 2):
                return False
        for u in COLORS:
            a, b = [w for w in COLORS if w != u]
            lhs = mats[u] @ mats[a] @ mats[u]
            rhs = mats[u] @ mats[b] @ mats[u]
            if np.abs(lhs - rhs).max() > tol * max(1, np.abs(lhs).max()):
                return False
    return True


def three_dim_is_rep(z, e, tol=1e-8):
    rep = three_dim(z)
    if not relations_hold(rep, tol):
        return False
    for v in SAMPLE_V:
        for m, n in weights_by_degree(e + 1):
            for u in COLORS:
                mat, scale = kl_matrix(rep, m, n, u, v)
                if np.abs(mat).max() > tol * scale:
                    return False
    return True


def zeta():
    return cmath.exp(2j * cmath.pi / 3)


def base_change_certificate(z, z2, tol=DEFAULT_TOL):
    """Find D = diag(a, 1, b) with D M(z) D^-1 = M(z2) at the sample v values."""
    zt = zeta()
    for a, b in ((zt ** -1, zt), (zt, zt ** -1), (1, 1)):
        d = np.diag([a, 1, b])
        dinv = np.linalg.inv(d)
        ok = True
        for v in SAMPLE_V:
            m1, m2 = three_dim(z).matrices(v), three_dim(z2).matrices(v)
            if any(np.abs(d @ m1[u] @ dinv - m2[u]).max() > tol * 10 for u in COLORS):
                ok = False
                break
        if ok:
            return (a, b)
    return None


def equivalent(z, z2, tol=DEFAULT_TOL):
    zt = zeta()
    if not any(abs(z2 - w) <= tol for w in (z, zt * z, z / zt)):
        return False
    if base_change_certificate(z, z2, tol) is None:
        raise ArithmeticError("rotated point without a base-change certificate")
    return True


def eigen_triple(z, v):
    """Eigenvalues of M_g + M_o + M_p predicted from z."""
    q2 = quantum_integer(2).eval(v)
    q3 = quantum_integer(3).eval(v)
    zt, zb = zeta(), complex(z).conjugate()
    return [q2 * (z + zb + q3), q2 * (z / zt + zt * zb + q3), q2 * (zt * z + zb / zt + q3)]


def is_simple(z, tol=DEFAULT_TOL):
    return abs(z) > tol


def simple_table(e):
    one = len(characters(e))
    ok, _, _ = zeta_certificate(e)
    if not ok:
        raise ArithmeticError("zeta action certificate failed")
    three = sum(1 for orb in zeta_orbits(e) if is_simple(orb[0].z))
    sos = one + 9 * three
    if sos != dimension(e):
        raise ArithmeticError(f"sum of squares {sos} != {dimension(e)}")
    return {"one_dim_count": one, "three_dim_count": three, "sum_of_squares": sos}


def report(e):
    orbit_of = {}
    for i, orb in enumerate(zeta_orbits(e)):
        for pt in orb:
            orbit_of[(pt.k, pt.l)] = i
    roots = []
    for pt in vanishing_set(e):
        d = pt.to_json()
        d["orbit"] = orbit_of[(pt.k, pt.l)]
        roots.append(d)
    table = simple_table(e)
    return {
        "level": e,
        "characters": [list(c.short()) for c in characters(e)],
        "roots": roots,
        "simple_table": table,
        "dimension": dimension(e),
        "t_e": t(e),
    }
