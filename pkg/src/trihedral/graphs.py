"""Tricolored graphs, their Hecke representations M(Gamma), the generalized
ADE diagrams and the certificates attached to them."""

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
import json

import networkx as nx
import numpy as np

from .exact_arith import ExactMatrix, LaurentPoly, block_matrix, quantum_integer, quantum_factorial
from .hecke import _bs_words, Q2
from .koornwinder import vanishing_generators, vanishing_set, t
from .sl3_fusion import COLORS, X_STEPS, central_character, level_weights, qdim, rotate

Q3 = quantum_integer(3)
Q3F = quantum_factorial(3)
ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def _mat(rows, r, c):
    return ExactMatrix([list(row) for row in rows], r, c)


@dataclass(frozen=True)
class TricoloredGraph:
    """Blocks: A is |O| x |G| (edges G -> O), B is |P| x |O| (O -> P),
    C is |G| x |P| (P -> G)."""
    green: int
    orange: int
    purple: int
    A: tuple
    B: tuple
    C: tuple
    name: str = ""
    level: int = None
    labels: tuple = field(default=None, compare=False)

    @classmethod
    def from_blocks(cls, A, B, C, sizes, name="", level=None, labels=None):
        g, o, p = sizes
        tup = lambda m: tuple(tuple(int(x) for x in row) for row in m)
        return cls(g, o, p, tup(A), tup(B), tup(C), name, level,
                   tuple(labels) if labels is not None else None)

    @property
    def sizes(self):
        return (self.green, self.orange, self.purple)

    @property
    def n(self):
        return sum(self.sizes)

    def blocks(self):
        g, o, p = self.sizes
        return _mat(self.A, o, g), _mat(self.B, p, o), _mat(self.C, g, p)

    def adjacency_X(self):
        """Directed adjacency with column = source (G -> O -> P -> G)."""
        return _assemble_x(self)

    def adjacency_Y(self):
        return self.adjacency_X().T

    def adjacency(self):
        return self.adjacency_X() + self.adjacency_Y()

    def rotated(self):
        """Shift colors g -> o -> p -> g."""
        g, o, p = self.sizes
        labels = None
        if self.labels is not None:
            labels = self.labels[g + o:] + self.labels[:g] + self.labels[g:g + o]
        return TricoloredGraph.from_blocks(self.C, self.A, self.B, (p, g, o), self.name, self.level, labels)

    def to_json(self):
        return {"name": self.name, "level": self.level, "green": self.green,
                "orange": self.orange, "purple": self.purple,
                "A": [list(r) for r in self.A], "B": [list(r) for r in self.B],
                "C": [list(r) for r in self.C]}

    @classmethod
    def from_json(cls, d):
        return cls.from_blocks(d["A"], d["B"], d["C"], (d["green"], d["orange"], d["purple"]),
                               d.get("name", ""), d.get("level"))


def _assemble_x(gr):
    g, o, p = gr.sizes
    n = g + o + p
    out = [[0] * n for _ in range(n)]
    for i in range(o):
        for j in range(g):
            out[g + i][j] = gr.A[i][j]
    for i in range(p):
        for j in range(o):
            out[g + o + i][g + j] = gr.B[i][j]
    for i in range(g):
        for j in range(p):
            out[i][g + o + j] = gr.C[i][j]
    return ExactMatrix(out, n, n)


def vertex_colors(gr):
    return ["g"] * gr.green + ["o"] * gr.orange + ["p"] * gr.purple


# -- constructions

def _graph_from_weights(verts, color_of, edge_count, name, level):
    by_color = {c: [w for w in verts if color_of[w] == c] for c in COLORS}
    g, o, p = (len(by_color[c]) for c in COLORS)
    idx = {c: {w: i for i, w in enumerate(by_color[c])} for c in COLORS}
    A = [[0] * g for _ in range(o)]
    B = [[0] * o for _ in range(p)]
    C = [[0] * p for _ in range(g)]
    for src in verts:
        for dst, k in edge_count(src).items():
            cs, cd = color_of[src], color_of[dst]
            i, j = idx[cd][dst], idx[cs][src]
            if (cs, cd) == ("g", "o"):
                A[i][j] += k
            elif (cs, cd) == ("o", "p"):
                B[i][j] += k
            elif (cs, cd) == ("p", "g"):
                C[i][j] += k
            else:
                raise ValueError(f"edge {src}->{dst} breaks the tricoloring")
    labels = by_color["g"] + by_color["o"] + by_color["p"]
    return TricoloredGraph.from_blocks(A, B, C, (g, o, p), name, level, labels)


def _shifted_color(w, corner):
    return rotate(central_character(*w), COLORS.index(corner))


def _weight_order(w):
    return (w[0] + w[1], -w[0])


def type_A(e, corner="g"):
    """Weights of level e; X-steps as edges; vertices ordered by (m+n, -m)."""
    verts = sorted(level_weights(e), key=_weight_order)
    vset = set(verts)
    color_of = {w: _shifted_color(w, corner) for w in verts}

    def edges(w):
        out = {}
        for dm, dn in X_STEPS:
            nb = (w[0] + dm, w[1] + dn)
            if nb in vset:
                out[nb] = out.get(nb, 0) + 1
        return out

    return _graph_from_weights(verts, color_of, edges, f"A{e}", e)


def sigma(w, e):
    m, n = w
    return (e - m - n, m)


def type_D(e, corner="g"):
    """Z/3 orbifold of type_A(e); the fixed weight splits into three copies."""
    if e <= 0 or e % 3:
        raise ValueError("type D needs e > 0 with e = 0 mod 3")
    weights = level_weights(e)
    fixed = (e // 3, e // 3)
    orbit_rep = {}
    for w in weights:
        orb = [w, sigma(w, e), sigma(sigma(w, e), e)]
        orbit_rep[w] = min(orb, key=_weight_order)
    reps = sorted({orbit_rep[w] for w in weights if w != fixed}, key=_weight_order)
    copies = [(fixed, i) for i in range(3)]
    verts = []
    for r in reps:
        if _weight_order(r) > _weight_order(fixed) and copies[0] not in verts:
            verts.extend(copies)
        verts.append((r, None))
    if copies[0] not in verts:
        verts.extend(copies)
    color_of = {v: _shifted_color(v[0], corner) for v in verts}
    wset = set(weights)

    def x_nbrs(w):
        return [(w[0] + dm, w[1] + dn) for dm, dn in X_STEPS if (w[0] + dm, w[1] + dn) in wset]

    # the fixed weight's X-neighbours form one sigma-orbit; each copy keeps one edge to it
    out_orbit = _sigma_cycle(x_nbrs(fixed)[0], e)

    def edges(v):
        w, copy = v
        out = {}
        if copy is not None:
            out[(orbit_rep[out_orbit[copy]], None)] = 1
            return out
        for nb in x_nbrs(w):
            if nb == fixed:
                for j in range(3):
                    out[(fixed, j)] = out.get((fixed, j), 0) + 1
            else:
                key = (orbit_rep[nb], None)
                out[key] = out.get(key, 0) + 1
        return out

    return _graph_from_weights(verts, color_of, edges, f"D{e}", e)


def _sigma_cycle(w, e):
    return [w, sigma(w, e), sigma(sigma(w, e), e)]


@lru_cache(maxsize=None)
def _load(fname):
    with resources.files("trihedral").joinpath("data", fname).open() as fh:
        return json.load(fh)


C_LEVELS = (1, 2, 3, 4, 5)
E_NAMES = ("E5", "E9_1", "E9_2", "E9_3", "E9_4", "E21")


def type_C(e):
    if e not in C_LEVELS:
        raise ValueError(f"conjugate type A graphs are bundled for e in {C_LEVELS}")
    return TricoloredGraph.from_json(_load(f"C{e}.json"))


def type_E(name):
    if name not in E_NAMES:
        raise ValueError(f"unknown exceptional graph {name!r}; choose from {E_NAMES}")
    return TricoloredGraph.from_json(_load(f"{name}.json"))


def special_triangle():
    """The level-3 solution with one vertex per color and all edges doubled."""
    return TricoloredGraph.from_blocks([[2]], [[2]], [[2]], (1, 1, 1), "special", 3)


def bundled_graphs():
    out = [type_A(e) for e in range(9)]
    out += [type_D(3), type_D(6)]
    out += [type_C(e) for e in C_LEVELS]
    out += [type_E(n) for n in E_NAMES]
    return out


# -- structural checks

def is_quasi_regular(gr):
    A, B, C = gr.blocks()
    return A.T * A == C * C.T and A * A.T == B.T * B and C.T * C == B * B.T


def is_strongly_connected(gr):
    X = gr.adjacency_X()
    ok = True
    for mat in (X, X.T):
        dg = nx.DiGraph()
        dg.add_nodes_from(range(gr.n))
        for i in range(gr.n):
            for j in range(gr.n):
                if mat[i, j]:
                    dg.add_edge(j, i)
        ok = ok and gr.n > 0 and nx.is_strongly_connected(dg)
    return ok


def is_admissible(gr):
    return is_quasi_regular(gr) and is_strongly_connected(gr)


# -- the representation M(Gamma)

@dataclass(frozen=True)
class GraphRep:
    g: ExactMatrix
    o: ExactMatrix
    p: ExactMatrix

    def __getitem__(self, u):
        return getattr(self, u)


def m_gamma(gr):
    if not is_quasi_regular(gr):
        raise ValueError("M(Gamma) is only defined for quasi-regular graphs")
    return _m_gamma(gr)


@lru_cache(maxsize=None)
def _m_gamma(gr):
    g, o, p = gr.sizes
    A, B, C = (b.map(lambda x: LaurentPoly.const(x)) for b in gr.blocks())

    def ident(k):
        return ExactMatrix.identity(k, Q3, ZERO)

    def z(r, c):
        return ExactMatrix.zeros(r, c, ZERO)

    rows = {"g": [ident(g), A.T, C], "o": [A, ident(o), B.T], "p": [C.T, B, ident(p)]}
    sizes = {"g": g, "o": o, "p": p}
    mats = {}
    for u in COLORS:
        grid = []
        for w in COLORS:
            if w == u:
                grid.append(rows[u])
            else:
                grid.append([z(sizes[w], sizes[c]) for c in COLORS])
        mats[u] = block_matrix(grid, ZERO).scale(Q2)
    return GraphRep(mats["g"], mats["o"], mats["p"])


def check_relations(rep):
    for u in COLORS:
        if rep[u] * rep[u] != rep[u].scale(Q3F):
            return False
    for u in COLORS:
        a, b = [w for w in COLORS if w != u]
        if rep[u] * rep[a] * rep[u] != rep[u] * rep[b] * rep[u]:
            return False
    return True


def kl_action(gr, m, n, u):
    """M(Gamma)(RKL(m,n,u)) as an exact Laurent matrix."""
    rep = m_gamma(gr)
    return _kl_action(rep, m, n, u)


@lru_cache(maxsize=None)
def _word_action(rep, word):
    if len(word) == 1:
        return rep[word[0]]
    return rep[word[0]] * _word_action(rep, word[1:])


@lru_cache(maxsize=None)
def _kl_action(rep, m, n, u):
    total = m + n
    size = rep.g.rows
    acc = ExactMatrix.zeros(size, size, ZERO)
    for word, kl, d in _bs_words(m, n, u):
        acc = acc + _word_action(rep, word).scale(Q2 ** (total - kl) * d)
    if total == 0:
        return acc
    denom = Q2 ** total

    def div(x):
        if not x:
            return ZERO
        q = x.div_exact(denom)
        if q is None:
            raise ArithmeticError("KL action is not a Laurent matrix")
        return q

    return acc.map(div)


def annihilation_test(gr, e):
    """p(m,n)(A(Gamma^X), A(Gamma^Y)) == 0 for all m+n = e+1; returns (ok, certificate)."""
    X = gr.adjacency_X()
    Y = X.T
    cert = []
    ok = True
    for (m, n), p in zip(((e + 1 - i, i) for i in range(e + 2)), vanishing_generators(e)):
        val = p.eval_matrices(X, Y)
        mx = val.max_abs()
        cert.append({"m": m, "n": n, "max_abs": int(mx)})
        ok = ok and mx == 0
    return ok, cert


def spectrum(gr):
    X = np.array(gr.adjacency_X().tolist(), dtype=float)
    if X.size == 0:
        return np.zeros(0, complex)
    return np.linalg.eigvals(X)


def _match_multiset(a, b, tol):
    b = list(b)
    for x in a:
        j = min(range(len(b)), key=lambda k: abs(b[k] - x), default=None)
        if j is None or abs(b[j] - x) > tol:
            return False
        b.pop(j)
    return not b


def spectrum_check(gr, e, family=None, tol=1e-6):
    """Type A: spectrum equals the z-values of the level-e vanishing set.
    Other families: nonzero eigenvalues lie in the type A spectrum."""
    eig = spectrum(gr)
    zs = [pt.z for pt in vanishing_set(e)]
    family = family or (gr.name[:1] if gr.name else "A")
    if family == "A":
        ok = _match_multiset(eig, zs, tol)
    else:
        ok = all(abs(x) <= tol or min(abs(x - z) for z in zs) <= tol for x in eig)
    return {
        "ok": bool(ok),
        "family": family,
        "eigenvalues": sorted([[round(x.real, 9) + 0.0, round(x.imag, 9) + 0.0] for x in eig]),
    }


def kl_positivity(gr, e):
    """All M(Gamma)(RKL(m,n,u)) with m+n <= e have entries in N[v, v^-1]."""
    for m, n in level_weights(e):
        for u in COLORS:
            mat = kl_action(gr, m, n, u)
            if not all(x.is_nonneg() if isinstance(x, LaurentPoly) else x >= 0
                       for row in mat.entries for x in row):
                return False
    return True


def type_D_counting(e):
    if e <= 0 or e % 3:
        raise ValueError("type D counting needs e > 0 with e = 0 mod 3")
    rank = (t(e) - 1) // 3 + 3
    gr = type_D(e)
    weights = level_weights(e)
    fixed = (e // 3, e // 3)
    seen, module_qdims = set(), []
    for w in weights:
        if w in seen or w == fixed:
            continue
        orb = _sigma_cycle(w, e)
        seen.update(orb)
        module_qdims.append(3 * qdim(*w, e))
    module_qdims.extend([qdim(*fixed, e)] * 3)
    lhs = 3 * sum(qdim(m, n, e) ** 2 for m, n in weights)
    rhs = sum(q ** 2 for q in module_qdims)
    return {
        "level": e,
        "rank": rank,
        "vertices": gr.n,
        "rank_matches": rank == gr.n,
        "algebra_qdim": 3.0,
        "module_qdims": [round(q, 9) for q in module_qdims],
        "lhs": round(lhs, 9),
        "rhs": round(rhs, 9),
        "identity_error": abs(lhs - rhs),
    }
