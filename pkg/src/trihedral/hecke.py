"""Trihedral Hecke algebras on the colored Kazhdan-Lusztig basis.

A basis label is either UNIT or a triple (m, n, u) with u the right color;
the left color is rho^(m-n)(u). Level None means the infinite algebra.
"""

from collections import namedtuple
from dataclasses import dataclass, field
from functools import lru_cache
import threading

import networkx as nx

from .exact_arith import FracLaurent, LaurentPoly, quantum_integer, quantum_factorial
from .sl3_fusion import COLORS, X_STEPS, Y_STEPS, d_coefficients, level_weights, rotate

UNIT = "1"
Label = namedtuple("Label", "m n u")

Q2 = quantum_integer(2)
Q3F = quantum_factorial(3)


def left_color(label):
    return rotate(label.u, label.m - label.n)


def label_str(label):
    return UNIT if label == UNIT else f"{label.m},{label.n},{label.u}"


def parse_label(s):
    s = s.strip()
    if s == UNIT:
        return UNIT
    m, n, u = s.split(",")
    if u not in COLORS:
        raise ValueError(f"unknown color {u!r}")
    return Label(int(m), int(n), u)


def _label_key(label):
    if label == UNIT:
        return (-1, 0, 0)
    return (label.m + label.n, -label.m, COLORS.index(label.u))


def _in_level(m, n, level):
    return m >= 0 and n >= 0 and (level is None or m + n <= level)


def _triple(m, n, u, steps, level):
    return [Label(m + dm, n + dn, u) for dm, dn in steps if _in_level(m + dm, n + dn, level)]


def mult_gen_right(label, u, level=None):
    """label * theta_u as {label: LaurentPoly}."""
    m, n, r = label
    if u == r:
        return {label: Q3F}
    steps = X_STEPS if r == rotate(u) else Y_STEPS
    return {lab: Q2 for lab in _triple(m, n, u, steps, level)}


def mult_gen_left(u, label, level=None):
    """theta_u * label as {label: LaurentPoly}; the right color is kept."""
    m, n, r = label
    ell = left_color(label)
    if u == ell:
        return {label: Q3F}
    steps = X_STEPS if u == rotate(ell) else Y_STEPS
    return {lab: Q2 for lab in _triple(m, n, r, steps, level)}


@lru_cache(maxsize=None)
def _bs_words(m, n, u):
    words = []
    for (k, l), d in sorted(d_coefficients(m, n).items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
        seq = [u]
        for _ in range(l):
            seq.append(rotate(seq[-1], -1))
        for _ in range(k):
            seq.append(rotate(seq[-1], 1))
        words.append((tuple(reversed(seq)), k + l, d))
    return tuple(words)


def bs_expansion(m, n, u):
    """RKL(m,n,u) as a list of (word, coefficient); words read left to right,
    so the last letter is the right color u."""
    return [(w, FracLaurent(LaurentPoly.const(d), Q2 ** kl)) for w, kl, d in _bs_words(m, n, u)]


@dataclass(frozen=True)
class HeckeElement:
    terms: dict = field(default_factory=dict)
    level: object = None

    @classmethod
    def make(cls, terms, level=None):
        clean = {}
        for lab, c in terms.items():
            c = FracLaurent.coerce(c)
            if c:
                clean[lab] = c
        return cls(clean, level)

    @classmethod
    def basis_element(cls, label, level=None):
        return cls.make({label: 1}, level)

    def __add__(self, other):
        d = dict(self.terms)
        for lab, c in other.terms.items():
            d[lab] = d[lab] + c if lab in d else c
        return HeckeElement.make(d, self.level)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return HeckeElement.make({lab: x * c for lab, x in self.terms.items()}, self.level)

    def __mul__(self, other):
        return multiply(self, other, self.level)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _label_key(kv[0]))

    def to_json(self):
        return [{"label": label_str(lab), "coeff": c.to_json()} for lab, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{label_str(lab)}]" for lab, c in self.sorted_terms())


def generator(u, level=None):
    return HeckeElement.basis_element(Label(0, 0, u), level)


_lock = threading.Lock()


@lru_cache(maxsize=None)
def _apply_word(word, label, level):
    """word * label with integral coefficients, as a sorted tuple of items."""
    if not word:
        return ((label, LaurentPoly.const(1)),)
    rest = _apply_word(word[1:], label, level)
    out = {}
    for lab, c in rest:
        for lab2, c2 in mult_gen_left(word[0], lab, level).items():
            out[lab2] = out.get(lab2, 0) + c * c2
    return tuple(sorted(((k, v) for k, v in out.items() if v), key=lambda kv: _label_key(kv[0])))


@lru_cache(maxsize=None)
def _basis_product(a, b, level):
    if a == UNIT:
        return ((b, FracLaurent.coerce(1)),)
    if b == UNIT:
        return ((a, FracLaurent.coerce(1)),)
    total = a.m + a.n
    acc = {}
    for word, kl, d in _bs_words(*a):
        weight = Q2 ** (total - kl) * d
        for lab, c in _apply_word(word, b, level):
            acc[lab] = acc.get(lab, 0) + weight * c
    denom = Q2 ** total
    out = []
    for lab, c in acc.items():
        if not c:
            continue
        q = c.div_exact(denom) if total else c
        out.append((lab, FracLaurent.coerce(q) if q is not None else FracLaurent(c, denom)))
    return tuple(sorted(out, key=lambda kv: _label_key(kv[0])))


def basis_product(a, b, level=None):
    """Product of two basis labels as {label: FracLaurent}."""
    with _lock:
        return dict(_basis_product(a, b, level))


def multiply(a, b, level=None):
    if level is None:
        level = a.level
    acc = {}
    for la, ca in a.terms.items():
        for lb, cb in b.terms.items():
            c = ca * cb
            for lab, x in basis_product(la, lb, level).items():
                acc[lab] = acc[lab] + c * x if lab in acc else c * x
    return HeckeElement.make(acc, level)


def t(e):
    return (e + 1) * (e + 2) // 2


def dimension(e):
    return 3 * t(e) + 1


def basis(e):
    return [UNIT] + [Label(m, n, u) for m, n in level_weights(e) for u in COLORS]


@dataclass
class CellDecomposition:
    left_cells: list
    right_cells: list
    two_sided_cells: list
    left_order: list
    right_order: list
    two_sided_order: list


def _cells(graph, labels):
    comps = [sorted(c, key=_label_key) for c in nx.strongly_connected_components(graph)]
    comps.sort(key=lambda c: (len(c), [_label_key(x) for x in c]))
    index = {lab: i for i, c in enumerate(comps) for lab in c}
    order = set()
    closure = nx.transitive_closure_dag(nx.condensation(graph, [set(c) for c in comps]))
    for i, j in closure.edges():
        order.add((j, i))  # j <= i: cell j is reached from cell i
    return comps, sorted(order)


def cells(e):
    """Left, right and two-sided cells of T_e from the structure constants.

    An edge y -> x records that x occurs in b*y (left) or y*b (right); cells
    are the strongly connected components, and the returned preorders list
    pairs (i, j) of cell indices with cell i below cell j.
    """
    labels = basis(e)
    left, right = nx.DiGraph(), nx.DiGraph()
    left.add_nodes_from(labels)
    right.add_nodes_from(labels)
    for b in labels:
        for y in labels:
            for x in basis_product(b, y, e):
                left.add_edge(y, x)
            for x in basis_product(y, b, e):
                right.add_edge(y, x)
    both = nx.compose(left, right)
    lc, lo = _cells(left, labels)
    rc, ro = _cells(right, labels)
    tc, to = _cells(both, labels)
    return CellDecomposition(lc, rc, tc, lo, ro, to)


def structure_constants_nonneg(e):
    """Return the list of (a, b) basis pairs whose product leaves N[v, v^-1]."""
    labels = basis(e)
    bad = []
    for a in labels:
        for b in labels:
            if not all(c.is_nonneg() for c in basis_product(a, b, e).values()):
                bad.append((a, b))
    return bad
