"""Exact arithmetic: Laurent polynomials in v, their fractions, bivariate
polynomials over Q, small exact matrices and a two-variable Buchberger."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
import cmath
import re

DEFAULT_TOL = 1e-9


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _fmt_coeff(c):
    c = _clean(c)
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Element of Z[v, v^-1] (rational coefficients are tolerated)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    d[int(k)] = _clean(c)
        self.coeffs = d
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls({exp: c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        return NotImplemented

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            d[k] = d.get(k, 0) + c
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, FracLaurent):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return other
        d = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                d[a + b] = d.get(a + b, 0) + ca * cb
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, FracLaurent):
            return other == self
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs.values())

    def is_nonneg(self):
        """True iff every coefficient is a nonnegative integer (N[v, v^-1])."""
        return all(isinstance(c, int) and c >= 0 for c in self.coeffs.values())

    def bar(self):
        return LaurentPoly({-k: c for k, c in self.coeffs.items()})

    def eval(self, v):
        return sum(c * v ** k for k, c in self.coeffs.items()) if self.coeffs else 0

    def div_exact(self, other):
        """Exact quotient self/other, or None if other does not divide self."""
        return _poly_divide_exact(self, other)

    def to_json(self):
        return {str(k): _clean(c) if isinstance(_clean(c), int) else _fmt_coeff(c)
                for k, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, obj):
        return cls({int(k): Fraction(c) if isinstance(c, str) else c for k, c in obj.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                mon = ""
            elif k == 1:
                mon = "v"
            else:
                mon = f"v^{k}"
            neg = c < 0
            a = -c if neg else c
            s = _fmt_coeff(a)
            body = mon if (s == "1" and mon) else s + mon
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


def _to_dense(p):
    """Shift out the minimal exponent: returns (shift, coefficient list low->high)."""
    lo, hi = p.min_exp(), p.max_exp()
    return lo, [Fraction(p.coeffs.get(k, 0)) for k in range(lo, hi + 1)]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] / lead
        q[i] = f
        if f:
            for j, bj in enumerate(b):
                a[i + j] -= f * bj
    return q, _trim(a[:len(b) - 1])


def _dense_gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    return a


def _primitive(a):
    """Scale a rational coefficient list to coprime integers with positive lead."""
    from math import gcd, lcm
    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for c in ints:
        g = gcd(g, c)
    g = g or 1
    if ints and ints[-1] < 0:
        g = -g
    return [c // g for c in ints], Fraction(den, 1) / g


def _poly_divide_exact(p, d):
    if d.is_zero():
        raise ZeroDivisionError("division by zero Laurent polynomial")
    if p.is_zero():
        return LaurentPoly()
    sp, ap = _to_dense(p)
    sd, ad = _to_dense(d)
    if len(ap) < len(ad):
        return None
    q, r = _dense_divmod(ap, ad)
    if r:
        return None
    return LaurentPoly({i + sp - sd: c for i, c in enumerate(q)})


class FracLaurent:
    """Element of Q(v) stored as a normalized fraction of Laurent polynomials."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _normalized=False):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.const(1) if den is None else LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._hash = None
        if _normalized:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = LaurentPoly(), LaurentPoly.const(1)
            return
        if len(den.coeffs) == 1:
            (k, c), = den.coeffs.items()
            self.num = LaurentPoly({e - k: Fraction(a) / c for e, a in num.coeffs.items()})
            self.den = LaurentPoly.const(1)
            return
        sn, an = _to_dense(num)
        sd, ad = _to_dense(den)
        g = _dense_gcd(an, ad)
        if len(g) > 1:
            an, _ = _dense_divmod(an, g)
            ad, _ = _dense_divmod(ad, g)
        ad_int, scale = _primitive(ad)
        an = [c * scale for c in an]
        self.num = LaurentPoly({i + sn - sd: c for i, c in enumerate(an)})
        self.den = LaurentPoly({i: c for i, c in enumerate(ad_int)})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, FracLaurent):
            return x
        if isinstance(x, (LaurentPoly, int, Fraction)):
            return cls(LaurentPoly.coerce(x), None, _normalized=True)
        return NotImplemented

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self):
        return self.den == LaurentPoly.const(1)

    def as_laurent(self):
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = FracLaurent.coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.is_laurent():
                return FracLaurent(self.num + other.num, None, _normalized=True)
            return FracLaurent(self.num + other.num, self.den)
        return FracLaurent(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FracLaurent(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-FracLaurent.coerce(other))

    def __rsub__(self, other):
        return FracLaurent.coerce(other) - self

    def __mul__(self, other):
        other = FracLaurent.coerce(other)
        if other is NotImplemented:
            return other
        if self.is_laurent() and other.is_laurent():
            return FracLaurent(self.num * other.num, None, _normalized=True)
        return FracLaurent(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        return FracLaurent(self.den, self.num)

    def __truediv__(self, other):
        return self * FracLaurent.coerce(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return FracLaurent(self.num ** n, self.den ** n, _normalized=self.is_laurent())

    def __eq__(self, other):
        other = FracLaurent.coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def is_nonneg(self):
        return self.is_laurent() and self.num.is_nonneg()

    def eval(self, v):
        return self.num.eval(v) / self.den.eval(v)

    def to_json(self):
        if self.is_laurent():
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        if "num" in obj:
            return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))
        return cls.coerce(LaurentPoly.from_json(obj))

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


V = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)


@lru_cache(maxsize=None)
def quantum_integer(s):
    """[s] = (v^s - v^-s)/(v - v^-1); [-s] = -[s], [0] = 0."""
    if s == 0:
        return LaurentPoly()
    if s < 0:
        return -quantum_integer(-s)
    return LaurentPoly({s - 1 - 2 * i: 1 for i in range(s)})


@lru_cache(maxsize=None)
def quantum_factorial(t):
    if t < 0:
        raise ValueError("factorial of a negative integer")
    out = ONE
    for s in range(1, t + 1):
        out = out * quantum_integer(s)
    return out


@lru_cache(maxsize=None)
def quantum_binomial(s, t):
    """Quantum binomial [s choose t] for integer s and t >= 0."""
    if t < 0:
        raise ValueError("binomial needs t >= 0")
    num = ONE
    for i in range(t):
        num = num * quantum_integer(s - i)
    q = _poly_divide_exact(num, quantum_factorial(t))
    if q is None:
        raise ArithmeticError(f"quantum binomial ({s},{t}) is not a Laurent polynomial")
    return q


def eval_complex(p, *point):
    """Evaluate a LaurentPoly / FracLaurent at v, or a BivarPoly at (X, Y)."""
    if isinstance(p, BivarPoly):
        x, y = point
        return complex(p.eval(x, y))
    (v,) = point
    if v == 0 and isinstance(p, LaurentPoly) and p.coeffs and p.min_exp() < 0:
        raise ZeroDivisionError("negative exponent at v = 0")
    return complex(p.eval(v))


class BivarPoly:
    """Polynomial in two commuting variables with rational coefficients.

    Exponent pairs are (first, second): (X, Y) for the sl3 polynomials and
    (x, y) after the change of variables x = XY, y = Y^3.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for k, c in coeffs.items():
                if c:
                    d[(int(k[0]), int(k[1]))] = Fraction(c)
        self.coeffs = d
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def var(cls, which):
        return cls({(1, 0): 1} if which == 0 else {(0, 1): 1})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, BivarPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        return NotImplemented

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = BivarPoly.coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            d[k] = d.get(k, 0) + c
        return BivarPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = BivarPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return BivarPoly.coerce(other) - self

    def __mul__(self, other):
        other = BivarPoly.coerce(other)
        if other is NotImplemented:
            return other
        d = {}
        for (a, b), c in self.coeffs.items():
            for (p, q), e in other.coeffs.items():
                k = (a + p, b + q)
                d[k] = d.get(k, 0) + c * e
        return BivarPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BivarPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = BivarPoly.coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def swap(self):
        return BivarPoly({(b, a): c for (a, b), c in self.coeffs.items()})

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def degree(self):
        return max((a + b for a, b in self.coeffs), default=-1)

    def constant_term(self):
        return self.coeffs.get((0, 0), Fraction(0))

    def eval(self, x, y):
        return sum(complex(c) * x ** a * y ** b for (a, b), c in self.coeffs.items()) \
            if self.coeffs else 0

    def eval_matrices(self, X, Y):
        """Evaluate at two commuting exact matrices (ExactMatrix)."""
        n = X.rows
        out = ExactMatrix.zeros(n, n)
        powers = {}

        def mono(a, b):
            if (a, b) not in powers:
                if a == 0 and b == 0:
                    powers[(a, b)] = ExactMatrix.identity(n)
                elif a > 0:
                    powers[(a, b)] = X * mono(a - 1, b)
                else:
                    powers[(a, b)] = Y * mono(a, b - 1)
            return powers[(a, b)]

        for (a, b), c in sorted(self.coeffs.items()):
            out = out + mono(a, b).scale(_clean(c))
        return out

    def to_json(self):
        return [[a, b, _clean(c) if isinstance(_clean(c), int) else _fmt_coeff(c)]
                for (a, b), c in sorted(self.coeffs.items())]

    @classmethod
    def from_json(cls, obj):
        return cls({(a, b): Fraction(c) for a, b, c in obj})

    @classmethod
    def parse(cls, text, names=("X", "Y")):
        """Read sums of terms like '-2X^2Y' or '3/2 Y^3'."""
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        term = re.compile(r"([+-])(\d+(?:/\d+)?)?((?:[%s](?:\^\d+)?)*)" % "".join(names))
        out = {}
        pos = 0
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or (m.group(2) is None and not m.group(3)):
                raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
            c = Fraction(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
            exps = [0, 0]
            for name, e in re.findall(r"([%s])(?:\^(\d+))?" % "".join(names), m.group(3)):
                exps[names.index(name)] += int(e or 1)
            key = tuple(exps)
            out[key] = out.get(key, 0) + c
            pos = m.end()
        return cls(out)

    def format(self, names=("X", "Y"), order="grlex"):
        if not self.coeffs:
            return "0"
        if order == "grlex":
            keys = sorted(self.coeffs, key=lambda k: (-(k[0] + k[1]), -k[0]))
        else:
            keys = sorted(self.coeffs, key=lambda k: (-k[1], -k[0]))
        parts = []
        for k in keys:
            c = self.coeffs[k]
            mon = ""
            for name, e in zip(names, k):
                if e == 1:
                    mon += name
                elif e > 1:
                    mon += f"{name}^{e}"
            neg = c < 0
            s = _fmt_coeff(-c if neg else c)
            body = mon if (s == "1" and mon) else s + mon
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BivarPoly({self})"


# -- Buchberger for two variables, lex with x < y (the second variable is eliminated)

def lex_key(mon):
    return (mon[1], mon[0])


def leading(p):
    k = max(p.coeffs, key=lex_key)
    return k, p.coeffs[k]


def _divides(a, b):
    return a[0] <= b[0] and a[1] <= b[1]


def reduce_poly(p, basis):
    """Full multivariate division remainder of p by basis (lex, x < y)."""
    rem = {}
    p = BivarPoly(p.coeffs)
    leads = [(leading(g), g) for g in basis if g]
    while p:
        mon, c = leading(p)
        for (lm, lc), g in leads:
            if _divides(lm, mon):
                factor = BivarPoly({(mon[0] - lm[0], mon[1] - lm[1]): c / lc})
                p = p - factor * g
                break
        else:
            rem[mon] = c
            p = p - BivarPoly({mon: c})
    return BivarPoly(rem)


def _monic(p):
    _, c = leading(p)
    return BivarPoly({k: v / c for k, v in p.coeffs.items()})


def _spoly(f, g):
    (a, ca), (b, cb) = leading(f), leading(g)
    lcm = (max(a[0], b[0]), max(a[1], b[1]))
    tf = BivarPoly({(lcm[0] - a[0], lcm[1] - a[1]): 1 / ca})
    tg = BivarPoly({(lcm[0] - b[0], lcm[1] - b[1]): 1 / cb})
    return tf * f - tg * g


def buchberger(gens, order="lex_x<y"):
    """Reduced Groebner basis, monic, sorted by increasing leading monomial."""
    if order != "lex_x<y":
        raise ValueError(f"unsupported monomial order {order!r}")
    basis = [_monic(g) for g in gens if g]
    pairs = list(combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        (a, _), (b, _) = leading(basis[i]), leading(basis[j])
        if min(a[0], b[0]) == 0 and min(a[1], b[1]) == 0:
            continue  # coprime leading monomials
        r = reduce_poly(_spoly(basis[i], basis[j]), basis)
        if r:
            basis.append(_monic(r))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimize
    minimal = []
    for i, g in enumerate(basis):
        lm = leading(g)[0]
        if any(_divides(leading(h)[0], lm) and (leading(h)[0] != lm or j < i)
               for j, h in enumerate(basis) if j != i):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm, lc = leading(g)
        tail = reduce_poly(g - BivarPoly({lm: lc}), others)
        reduced.append(_monic(BivarPoly({lm: lc}) + tail))
    return sorted(reduced, key=lambda g: lex_key(leading(g)[0]))


class ExactMatrix:
    """Dense matrix over an exact ring (int, Fraction, LaurentPoly, FracLaurent)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, rows=None, cols=None):
        self.entries = tuple(tuple(r) for r in entries)
        self.rows = len(self.entries) if rows is None else rows
        self.cols = (len(self.entries[0]) if self.entries else 0) if cols is None else cols

    @classmethod
    def zeros(cls, r, c, zero=0):
        return cls([[zero] * c for _ in range(r)], r, c)

    @classmethod
    def identity(cls, n, one=1, zero=0):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n, n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                           self.rows, self.cols)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return ExactMatrix([[c * a for a in r] for r in self.entries], self.rows, self.cols)

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for r in self.entries:
            row = []
            for col in cols:
                acc = 0
                for a, b in zip(r, col):
                    if a and b:
                        acc = a * b + acc
                row.append(acc)
            out.append(row)
        return ExactMatrix(out, self.rows, other.cols)

    def transpose(self):
        return ExactMatrix([list(c) for c in zip(*self.entries)] if self.rows else
                           [[] for _ in range(self.cols)], self.cols, self.rows)

    T = property(transpose)

    def map(self, f):
        return ExactMatrix([[f(a) for a in r] for r in self.entries], self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return False
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self):
        return all(not a for r in self.entries for a in r)

    def tolist(self):
        return [list(r) for r in self.entries]

    def max_abs(self):
        return max((abs(a) for r in self.entries for a in r), default=0)

    def rank(self):
        """Rank over Q (entries must be rational)."""
        m = [[Fraction(a) for a in r] for r in self.entries]
        rank, col = 0, 0
        rows, cols = self.rows, self.cols
        while rank < rows and col < cols:
            piv = next((i for i in range(rank, rows) if m[i][col]), None)
            if piv is None:
                col += 1
                continue
            m[rank], m[piv] = m[piv], m[rank]
            p = m[rank][col]
            for i in range(rank + 1, rows):
                if m[i][col]:
                    f = m[i][col] / p
                    ri, rr = m[i], m[rank]
                    for j in range(col, cols):
                        if rr[j]:
                            ri[j] -= f * rr[j]
            rank += 1
            col += 1
        return rank

    def inverse(self):
        """Inverse over Q via Gauss-Jordan; raises if singular."""
        n = self.rows
        m = [[Fraction(a) for a in r] + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.entries)]
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            m[c], m[piv] = m[piv], m[c]
            p = m[c][c]
            m[c] = [a / p for a in m[c]]
            for i in range(n):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return ExactMatrix([[_clean(a) for a in r[n:]] for r in m], n, n)

    def __repr__(self):
        return f"ExactMatrix({self.tolist()})"


def block_matrix(blocks, zero=0):
    """Assemble a matrix from a grid of ExactMatrix blocks (None = zero block)."""
    heights = []
    for row in blocks:
        h = next((b.rows for b in row if b is not None), 0)
        heights.append(h)
    widths = []
    for j in range(len(blocks[0])):
        w = next((row[j].cols for row in blocks if row[j] is not None), 0)
        widths.append(w)
    out = []
    for row, h in zip(blocks, heights):
        for i in range(h):
            line = []
            for b, w in zip(row, widths):
                line.extend(b.entries[i] if b is not None else [zero] * w)
            out.append(line)
    return ExactMatrix(out, sum(heights), sum(widths))


def is_close(a, b, tol=DEFAULT_TOL):
    return abs(complex(a) - complex(b)) <= tol


def unit_root(n, k=1):
    return cmath.exp(2j * cmath.pi * k / n)
