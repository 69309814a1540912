"""Trihedral zigzag algebras on the cut-off weight triangle.

Each vertex carries three degree-2 loops l_x, l_y, l_z subject to the flag
cohomology relations, so the loops at a vertex span a 6-dimensional ring.
Internally that ring is Q[a, b]/(b^2 + a^2 + ab, a^3) with a = l_x,
b = l_y, l_z = -a - b and standard monomials 1, a, b, a^2, ab, a^2 b.

An arrow space between neighbours (source letter i, target letter j) is
spanned by p and p*l_i. Loops on either side of an arrow act through
l_i -> t, l_j -> -t, l_k -> 0 with t^2 = 0, where p*t means p*l_i.

The level-e algebra keeps only the vertices with m + n <= e and every basis
element between them, i.e. the idempotent truncation of the infinite one.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .exact_arith import ExactMatrix, LaurentPoly
from .sl3_fusion import COLORS, central_character, level_weights

LETTERS = ("x", "y", "z")
LETTER_OF_COLOR = dict(zip(COLORS, LETTERS))
NEIGHBOR_STEPS = ((1, 0), (-1, 0), (1, -1), (-1, 1), (0, 1), (0, -1))

# standard monomials of the loop ring, as exponents of (a, b)
STD = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (2, 1))
STD_INDEX = {m: i for i, m in enumerate(STD)}
LOOP_DEGREES = (0, 2, 2, 4, 4, 6)
ARROW_DEGREES = (2, 4)


def succ(letter):
    return LETTERS[(LETTERS.index(letter) + 1) % 3]


def pred(letter):
    return LETTERS[(LETTERS.index(letter) - 1) % 3]


# -- the loop ring

def _reduce_monomial(p, q):
    """a^p b^q as a coefficient vector over STD."""
    if (p, q) in STD_INDEX:
        vec = [Fraction(0)] * 6
        vec[STD_INDEX[(p, q)]] = Fraction(1)
        return vec
    if p + q > 3:
        return [Fraction(0)] * 6
    if q >= 2:  # b^2 = -a^2 - ab
        u = _reduce_monomial(p + 2, q - 2)
        w = _reduce_monomial(p + 1, q - 1)
        return [-x - y for x, y in zip(u, w)]
    return [Fraction(0)] * 6  # a^3 = 0 and everything divisible by it


@lru_cache(maxsize=None)
def _mult_table():
    table = {}
    for i, j in product(range(6), repeat=2):
        (p1, q1), (p2, q2) = STD[i], STD[j]
        table[(i, j)] = tuple(_reduce_monomial(p1 + p2, q1 + q2))
    return table


def ring_mul(u, w):
    out = [Fraction(0)] * 6
    table = _mult_table()
    for i, x in enumerate(u):
        if not x:
            continue
        for j, y in enumerate(w):
            if y:
                for k, c in enumerate(table[(i, j)]):
                    if c:
                        out[k] += x * y * c
    return out


def letter_vec(letter):
    return {"x": [0, 1, 0, 0, 0, 0], "y": [0, 0, 1, 0, 0, 0], "z": [0, -1, -1, 0, 0, 0]}[letter]


def _ring_basis(letter):
    """Coordinates of 1, l_i, l_j, l_i l_j, l_i l_k, l_i^2 l_k (i = letter)."""
    li, lj, lk = (letter_vec(c) for c in (letter, succ(letter), pred(letter)))
    one = [1, 0, 0, 0, 0, 0]
    return [one, li, lj, ring_mul(li, lj), ring_mul(li, lk), ring_mul(ring_mul(li, li), lk)]


@lru_cache(maxsize=None)
def _change_of_basis(letter):
    """(to_std, from_std) as ExactMatrix; columns of to_std are the user basis."""
    cols = [[Fraction(x) for x in v] for v in _ring_basis(letter)]
    to_std = ExactMatrix([[cols[j][i] for j in range(6)] for i in range(6)], 6, 6)
    return to_std, to_std.inverse()


def loop_to_std(letter, coeffs):
    to_std, _ = _change_of_basis(letter)
    return [sum((to_std[i, j] * coeffs[j] for j in range(6)), Fraction(0)) for i in range(6)]


def loop_from_std(letter, vec):
    _, from_std = _change_of_basis(letter)
    return [sum((from_std[i, j] * vec[j] for j in range(6)), Fraction(0)) for i in range(6)]


def _std_trace(vec):
    # tr(l_x^2 l_y) = tr(a^2 b) = -1
    return -vec[5]


def _slide(vec, src_letter, dst_letter):
    """Image of a loop (std coordinates) in Q[t]/t^2 for an arrow src -> dst."""
    val = {src_letter: 1, dst_letter: -1}
    third = ({"x", "y", "z"} - {src_letter, dst_letter}).pop()
    val[third] = 0
    # l_x = a, l_y = b
    return (vec[0], vec[1] * val["x"] + vec[2] * val["y"])


# -- vertices and monomials

@dataclass(frozen=True, order=True)
class ZigzagVertex:
    weight: tuple
    letter: str = field(compare=False)

    def __str__(self):
        return f"{self.letter}_{self.weight[0]},{self.weight[1]}"


def vertex(m, n):
    return ZigzagVertex((m, n), LETTER_OF_COLOR[central_character(m, n)])


def vertices(e):
    """Vertices of the level-e algebra, letter blocks x, y, z in weight order."""
    ws = level_weights(e)
    vs = [vertex(*w) for w in ws]
    return [v for letter in LETTERS for v in vs if v.letter == letter]


def adjacent(v1, v2):
    d = (v2.weight[0] - v1.weight[0], v2.weight[1] - v1.weight[1])
    return d in NEIGHBOR_STEPS


def _in_level(v, e):
    return e is None or sum(v.weight) <= e


_LOOP_NAMES = ("1", "l_{i}", "l_{j}", "l_{i}l_{j}", "l_{i}l_{k}", "l_{i}^2l_{k}")


@dataclass(frozen=True, order=True)
class PathMonomial:
    source: ZigzagVertex
    target: ZigzagVertex
    kind: str  # "loop" or "arrow"
    index: int

    @property
    def degree(self):
        return LOOP_DEGREES[self.index] if self.kind == "loop" else ARROW_DEGREES[self.index]

    @property
    def is_idempotent(self):
        return self.kind == "loop" and self.index == 0

    def __str__(self):
        i = self.source.letter
        if self.kind == "loop":
            if self.index == 0:
                return f"e[{self.source}]"
            name = _LOOP_NAMES[self.index].format(i=i, j=succ(i), k=pred(i))
            return f"{name}[{self.source}]"
        tail = f"l_{i}" if self.index else ""
        return f"p[{self.source}->{self.target}]{tail}"


def normal_basis(v1, v2, e=None):
    if not (_in_level(v1, e) and _in_level(v2, e)):
        raise ValueError(f"vertex outside level {e}")
    if v1 == v2:
        return [PathMonomial(v1, v1, "loop", k) for k in range(6)]
    if adjacent(v1, v2):
        return [PathMonomial(v1, v2, "arrow", k) for k in range(2)]
    return []


def basis(e):
    vs = vertices(e)
    return [m for v1 in vs for v2 in vs for m in normal_basis(v1, v2, e)]


# -- elements

@dataclass(frozen=True)
class ZigzagElement:
    terms: dict = field(default_factory=dict)

    @classmethod
    def make(cls, terms):
        return cls({k: Fraction(c) for k, c in terms.items() if c})

    @classmethod
    def of(cls, mono, c=1):
        return cls.make({mono: c})

    def __add__(self, other):
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, 0) + c
        return ZigzagElement.make(d)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ZigzagElement.make({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, ZigzagElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({m.degree for m in self.terms})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(self.terms.items()))


def idempotent(v):
    return ZigzagElement.of(PathMonomial(v, v, "loop", 0))


def loop(v, letter):
    """The loop l_letter at v."""
    coeffs = loop_from_std(v.letter, letter_vec(letter))
    return ZigzagElement.make({PathMonomial(v, v, "loop", k): c for k, c in enumerate(coeffs)})


def arrow(v1, v2):
    if not adjacent(v1, v2):
        raise ValueError(f"{v1} and {v2} are not neighbours")
    return ZigzagElement.of(PathMonomial(v1, v2, "arrow", 0))


def _loop_element(v, vec):
    coeffs = loop_from_std(v.letter, vec)
    return {PathMonomial(v, v, "loop", k): c for k, c in enumerate(coeffs) if c}


def _arrow_element(v1, v2, pair):
    return {PathMonomial(v1, v2, "arrow", k): c for k, c in enumerate(pair) if c}


def _unit_vec(k, n):
    vec = [Fraction(0)] * n
    vec[k] = Fraction(1)
    return vec


@lru_cache(maxsize=None)
def _mono_product_cached(a, b):
    return tuple(_mono_product(a, b).items())


def _mono_product(a, b):
    """a * b for basis monomials (b is applied first) as {monomial: coefficient}."""
    if b.target != a.source:
        return {}
    if a.kind == "loop" and b.kind == "loop":
        v = a.source
        u = loop_to_std(v.letter, _unit_vec(a.index, 6))
        w = loop_to_std(v.letter, _unit_vec(b.index, 6))
        return _loop_element(v, ring_mul(u, w))
    if a.kind == "loop":  # loop at the target of the arrow b
        h = loop_to_std(a.source.letter, _unit_vec(a.index, 6))
        c0, c1 = _slide(h, b.source.letter, b.target.letter)
        f = _unit_vec(b.index, 2)
        return _arrow_element(b.source, b.target, (c0 * f[0], c0 * f[1] + c1 * f[0]))
    if b.kind == "loop":  # loop at the source of the arrow a
        h = loop_to_std(b.source.letter, _unit_vec(b.index, 6))
        c0, c1 = _slide(h, a.source.letter, a.target.letter)
        f = _unit_vec(a.index, 2)
        return _arrow_element(a.source, a.target, (c0 * f[0], c0 * f[1] + c1 * f[0]))
    # two arrows v1 -> v2 -> v3
    v1, v2, v3 = b.source, b.target, a.target
    i, j = v1.letter, v2.letter
    g0, g1 = _unit_vec(a.index, 2)  # a = p23 (g0 + g1 l_j)
    f0, f1 = _unit_vec(b.index, 2)
    # l_j at v2 slides through p12 as -l_i
    d0, d1 = g0 * f0, g0 * f1 - g1 * f0
    if v3 == v1:
        li, lj = letter_vec(i), letter_vec(j)
        base = ring_mul(li, lj)
        vec = [d0 * x + d1 * y for x, y in zip(base, ring_mul(base, li))]
        return _loop_element(v1, vec)
    if v3.letter in (i, j) or not adjacent(v1, v3):
        return {}
    # zigzig: p12 p23 = p13 l_i, and p13 l_i^2 = 0
    return _arrow_element(v1, v3, (0, d0))


def multiply(a, b):
    """The product a*b, with b applied first (zero unless the endpoints match)."""
    acc = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            for m, c in _mono_product_cached(ma, mb):
                acc[m] = acc.get(m, 0) + ca * cb * c
    return ZigzagElement.make(acc)


def trace(a):
    total = Fraction(0)
    for m, c in a.terms.items():
        if m.kind == "loop":
            total += c * _std_trace(loop_to_std(m.source.letter, _unit_vec(m.index, 6)))
    return total


# -- global data

def gram_matrix(e):
    bs = basis(e)
    elems = [ZigzagElement.of(m) for m in bs]
    rows = []
    for a in elems:
        rows.append([trace(multiply(a, b)) for b in elems])
    return ExactMatrix(rows, len(bs), len(bs))


def gram_nondegenerate(e):
    g = gram_matrix(e)
    return g.rank() == g.rows


def _gdim(v1, v2, e):
    out = LaurentPoly()
    for m in normal_basis(v1, v2, e):
        out = out + LaurentPoly.monomial(m.degree)
    return out


def graded_cartan(e):
    """Entry (v1, v2) is the graded dimension of the space of paths v2 -> v1."""
    vs = vertices(e)
    return ExactMatrix([[_gdim(v2, v1, e) for v2 in vs] for v1 in vs], len(vs), len(vs))


def theta_action(color, e):
    """Matrix of theta_color on classes of indecomposable projectives."""
    letter = LETTER_OF_COLOR[color]
    vs = vertices(e)
    rows = []
    for vi in vs:
        if vi.letter != letter:
            rows.append([LaurentPoly() for _ in vs])
        else:
            rows.append([_gdim(vi, vj, e).shift(-3) for vj in vs])
    return ExactMatrix(rows, len(vs), len(vs))


def loop_graded_dimension(v):
    return _gdim(v, v, None)


def composable_triples(e):
    bs = basis(e)
    by_source = {}
    for m in bs:
        by_source.setdefault(m.source, []).append(m)
    for c in bs:
        for b in by_source[c.target]:
            for a in by_source[b.target]:
                yield a, b, c


def associativity_failures(triples):
    bad = []
    for a, b, c in triples:
        ea, eb, ec = (ZigzagElement.of(m) for m in (a, b, c))
        if multiply(multiply(ea, eb), ec) != multiply(ea, multiply(eb, ec)):
            bad.append((a, b, c))
    return bad


def degree_two_generators(e):
    vs = vertices(e)
    gens = [loop(v, c) for v in vs for c in LETTERS]
    gens += [arrow(v1, v2) for v1 in vs for v2 in vs if adjacent(v1, v2)]
    return gens


def quadratic_witness(e):
    """Every basis element of degree >= 4 lies in the span of products of a
    degree-2 generator with a basis element two degrees lower."""
    bs = basis(e)
    gens = degree_two_generators(e)
    for m in bs:
        if m.degree < 4:
            continue
        spans = []
        for g in gens:
            for c in bs:
                if c.degree != m.degree - 2:
                    continue
                prod = multiply(g, ZigzagElement.of(c))
                if prod.terms:
                    spans.append(prod)
        target = [x for x in normal_basis(m.source, m.target, e) if x.degree == m.degree]
        rows = [[p.terms.get(x, Fraction(0)) for x in target] for p in spans]
        if not rows or ExactMatrix(rows, len(rows), len(target)).rank() < len(target):
            return False
    return True
