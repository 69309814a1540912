"""Weights of sl3, fusion with the two fundamental representations,
central characters and quantum dimensions at a root of unity."""

from collections import Counter
from functools import lru_cache
import cmath

from .exact_arith import quantum_integer

COLORS = ("g", "o", "p")

X_STEPS = ((1, 0), (-1, 1), (0, -1))
Y_STEPS = ((0, 1), (1, -1), (-1, 0))


def _tensor(dec, steps):
    out = Counter()
    for (m, n), mult in dec.items():
        for dm, dn in steps:
            w = (m + dm, n + dn)
            if w[0] >= 0 and w[1] >= 0:
                out[w] += mult
    return out


def tensor_X(dec):
    """Tensor a decomposition {(m, n): multiplicity} with X = L(1,0)."""
    return _tensor(dec, X_STEPS)


def tensor_Y(dec):
    """Tensor a decomposition with Y = L(0,1)."""
    return _tensor(dec, Y_STEPS)


@lru_cache(maxsize=None)
def _monomial(k, l):
    dec = Counter({(0, 0): 1})
    for _ in range(k):
        dec = tensor_X(dec)
    for _ in range(l):
        dec = tensor_Y(dec)
    return tuple(sorted(dec.items()))


def decompose_monomial(k, l):
    """Decomposition of X^k Y^l into simples."""
    return Counter(dict(_monomial(k, l)))


def weights_by_degree(total):
    """All weights with m+n == total, ordered by m descending."""
    return [(m, total - m) for m in range(total, -1, -1)]


def level_weights(e):
    """Weights with m+n <= e ordered by (m+n, -m)."""
    return [w for s in range(e + 1) for w in weights_by_degree(s)]


@lru_cache(maxsize=None)
def _d_coefficients(m, n):
    # [X^m Y^n] = [L(m,n)] + lower terms, so peel the lower terms off recursively
    result = Counter({(m, n): 1})
    for w, mult in _monomial(m, n):
        if w == (m, n):
            continue
        for kl, c in _d_coefficients(*w):
            result[kl] -= mult * c
    return tuple(sorted((k, c) for k, c in result.items() if c))


def d_coefficients(m, n):
    """Integers d with [L(m,n)] = sum d[(k,l)] [X^k Y^l]."""
    return dict(_d_coefficients(m, n))


def central_character(m, n):
    return COLORS[(m + 2 * n) % 3]


def rotate(color, k=1):
    """Apply the 3-cycle g -> o -> p -> g k times (k may be negative)."""
    return COLORS[(COLORS.index(color) + k) % 3]


def eta(e):
    return cmath.exp(1j * cmath.pi / (e + 3))


def qdim(m, n, e):
    """Quantum dimension [2]^-1 [m+1][n+1][m+n+2] at v = exp(i pi/(e+3))."""
    if m < 0 or n < 0 or m + n > e:
        raise ValueError(f"weight ({m},{n}) is not of level {e}")
    q = eta(e)
    val = (quantum_integer(m + 1).eval(q) * quantum_integer(n + 1).eval(q)
           * quantum_integer(m + n + 2).eval(q) / quantum_integer(2).eval(q))
    return complex(val).real
