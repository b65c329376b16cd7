"""Exact rational scalars, polynomials and matrices.

Everything here works over ``fractions.Fraction``; there is no floating point
anywhere in the package.  Values are immutable once built.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from sympy import divisors as _divisors

Q = Fraction
R = TypeVar("R")

# degree reported for the zero polynomial
ZERO_DEGREE = -1


def q(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(value)


def fmt_q(value: Fraction) -> str:
    value = q(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# univariate polynomials


class Poly:
    """Dense univariate polynomial, coefficients ascending by degree."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        cs = [q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "t") -> "Poly":
        return cls([0] * k + [c], var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "t") -> "Poly":
        p = cls([1], var)
        for r in roots:
            p = p * cls([-q(r), 1], var)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[fmt_q(c) for c in self.coeffs]}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = fmt_q(c) + ("*" if mono else "")
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly([other], self.var)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = q(other)
            return Poly([c * x for x in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Poly) else Poly([], x.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / other.lead
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Poly(quo, self.var), Poly(rem[:dq] if dq > 0 else [], self.var)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self * (1 / self.lead)

    def shift(self, b) -> "Poly":
        """Return p(t + b)."""
        return self(Poly([q(b), 1], self.var))

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def order_at_zero(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return ZERO_DEGREE


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def rational_root_multiset(p: Poly) -> tuple[Counter, Poly]:
    """Split off every rational root of ``p``.

    Returns ``(roots, nonsplit)`` with ``p == nonsplit * prod((t - r)**m)``;
    ``nonsplit`` has no rational root.
    """
    if not p:
        raise ValueError("the zero polynomial has no root multiset")
    roots: Counter = Counter()
    rest = p
    while rest.degree >= 1 and rest.coeffs[0] == 0:
        roots[Fraction(0)] += 1
        rest = Poly(rest.coeffs[1:], p.var)
    if rest.degree >= 1:
        den = lcm(*(c.denominator for c in rest.coeffs))
        ints = [int(c * den) for c in rest.coeffs]
        g = reduce(gcd, ints)
        ints = [c // g for c in ints]
        a0, an = abs(ints[0]), abs(ints[-1])
        at_one, at_minus_one = sum(ints), sum(c * (-1) ** k for k, c in enumerate(ints))
        for num in _divisors(a0):
            for den_ in _divisors(an):
                if gcd(num, den_) != 1:
                    continue
                for r in (Fraction(num, den_), Fraction(-num, den_)):
                    # cheap necessary conditions: (den - num) | p(1), (den + num) | p(-1)
                    if r != 1 and at_one % (r.denominator - r.numerator) != 0:
                        continue
                    if r != -1 and at_minus_one % (r.denominator + r.numerator) != 0:
                        continue
                    lin = Poly([-r, 1], p.var)
                    while rest.degree >= 1:
                        quo, rem = divmod(rest, lin)
                        if rem:
                            break
                        roots[r] += 1
                        rest = quo
            if rest.degree < 1:
                break
    return roots, rest


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MultiPoly:
    """Sparse polynomial over Q in a fixed tuple of named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: dict | None = None):
        self.vars: tuple[str, ...] = tuple(vars)
        clean = {}
        for e, c in (terms or {}).items():
            c = q(c)
            if c:
                e = tuple(e)
                if len(e) != len(self.vars):
                    raise ValueError(f"exponent {e} does not match variables {self.vars}")
                clean[e] = c
        self.terms: dict[tuple[int, ...], Fraction] = clean

    @classmethod
    def const(cls, vars: Sequence[str], c) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str, power: int = 1) -> "MultiPoly":
        e = [0] * len(vars)
        e[list(vars).index(name)] = power
        return cls(vars, {tuple(e): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(self.vars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {{{', '.join(f'{e}: {fmt_q(c)}' for e, c in sorted(self.terms.items()))}}})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = fmt_q(c) + ("*" if mono else "")
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = q(other)
            return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        out = MultiPoly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return MultiPoly(self.vars, out)

    def subs(self, values: dict) -> "MultiPoly":
        """Substitute rationals for some variables; the variable tuple is kept."""
        idx = {self.vars.index(k): q(v) for k, v in values.items()}
        out: dict = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, v in idx.items():
                c = c * v ** e[i]
                e2[i] = 0
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + c
        return MultiPoly(self.vars, out)

    def drop(self, keep: Sequence[str]) -> "MultiPoly":
        """Re-express over ``keep``; the dropped variables must not occur."""
        pos = [self.vars.index(v) for v in keep]
        out = {}
        for e, c in self.terms.items():
            if sum(e) != sum(e[i] for i in pos):
                raise ValueError("cannot drop a variable that still occurs")
            out[tuple(e[i] for i in pos)] = c
        return MultiPoly(keep, out)

    def to_poly(self, name: str) -> Poly:
        """Univariate view in ``name``; all other variables must be absent."""
        i = self.vars.index(name)
        deg = max((e[i] for e in self.terms), default=-1)
        cs = [Fraction(0)] * (deg + 1)
        for e, c in self.terms.items():
            if sum(e) != e[i]:
                raise ValueError("polynomial is not univariate in " + name)
            cs[e[i]] = c
        return Poly(cs, name)

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def lead_term(self) -> tuple[tuple[int, ...], Fraction]:
        e = max(self.terms)
        return e, self.terms[e]

    def normalized(self) -> "MultiPoly":
        """Scale so the lexicographically largest monomial has coefficient 1."""
        if not self.terms:
            return self
        return self * (1 / self.lead_term()[1])


def proportional(a, b) -> bool:
    """Projective equality of two polynomials (both must be nonzero).

    Works for Poly, MultiPoly, or any mapping-like coefficient vectors given
    as dicts; tested by cross-multiplying against a common pivot term.
    """
    ta, tb = _coeff_map(a), _coeff_map(b)
    if not ta or not tb or ta.keys() != tb.keys():
        return False
    pivot = next(iter(ta))
    ra, rb = ta[pivot], tb[pivot]
    return all(ta[k] * rb == tb[k] * ra for k in ta)


def _coeff_map(p) -> dict:
    if isinstance(p, Poly):
        return {k: c for k, c in enumerate(p.coeffs) if c}
    if isinstance(p, MultiPoly):
        return dict(p.terms)
    if isinstance(p, dict):
        return {k: q(v) for k, v in p.items() if v}
    raise TypeError(type(p))


# ---------------------------------------------------------------------------
# dense rational matrices


class QMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rs = tuple(tuple(q(x) for x in r) for r in rows)
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise ValueError("ragged matrix")
        else:
            width = ncols or 0
        self.rows: tuple[tuple[Fraction, ...], ...] = rs
        self.nrows = len(rs)
        self.ncols = width

    @classmethod
    def zeros(cls, r: int, c: int) -> "QMatrix":
        return cls([[0] * c for _ in range(r)], ncols=c)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def diag(cls, entries: Sequence) -> "QMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_function(cls, r: int, c: int, f: Callable[[int, int], object]) -> "QMatrix":
        return cls([[f(i, j) for j in range(c)] for i in range(r)], ncols=c)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"QMatrix({self.tolist()})"

    def tolist(self) -> list[list[str]]:
        return [[fmt_q(x) for x in r] for r in self.rows]

    def _check_same(self, other: "QMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in r] for r in self.rows], self.ncols)

    def __mul__(self, c) -> "QMatrix":
        c = q(c)
        return QMatrix([[c * a for a in r] for r in self.rows], self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return QMatrix(
            [[sum((a * b for a, b in zip(r, col) if a and b), Fraction(0)) for col in cols] for r in self.rows],
            other.ncols,
        )

    def __pow__(self, k: int) -> "QMatrix":
        out = QMatrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def T(self) -> "QMatrix":
        return QMatrix(list(zip(*self.rows)) if self.nrows else [], self.nrows)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix([[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def hstack(self, other: "QMatrix") -> "QMatrix":
        return QMatrix([a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self.rows + other.rows, self.ncols)


def commutator(a: QMatrix, b: QMatrix) -> QMatrix:
    return a @ b - b @ a


def block_diag(blocks: Sequence[QMatrix]) -> QMatrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    rows = [[Fraction(0)] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[r0 + i][c0 + j] = b.rows[i][j]
        r0 += b.nrows
        c0 += b.ncols
    return QMatrix(rows, m)


def rref(m: QMatrix) -> tuple[QMatrix, tuple[int, ...], int]:
    """Reduced row echelon form over Q: ``(R, pivot_columns, rank)``."""
    a = [list(r) for r in m.rows]
    pivots = []
    r = 0
    for c in range(m.ncols):
        if r == m.nrows:
            break
        p = next((i for i in range(r, m.nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.nrows):
            f = a[i][c]
            if i != r and f:
                ar = a[r]
                a[i] = [x - f * y for x, y in zip(a[i], ar)]
        pivots.append(c)
        r += 1
    return QMatrix(a, m.ncols), tuple(pivots), len(pivots)


def rank(m: QMatrix) -> int:
    return rref(m)[2]


def row_space(m: QMatrix) -> QMatrix:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    red, _, rk = rref(m)
    return QMatrix(red.rows[:rk], m.ncols)


def nullspace(m: QMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of ``{v : m v = 0}``, one vector per free column."""
    red, pivots, _ = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -red.rows[row][f]
        basis.append(tuple(v))
    return basis


def solve(m: QMatrix, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of ``m v = rhs`` (free variables set to zero), or None."""
    aug = m.hstack(QMatrix([[x] for x in rhs], 1))
    red, pivots, _ = rref(aug)
    if m.ncols in pivots:
        return None
    v = [Fraction(0)] * m.ncols
    for row, pc in enumerate(pivots):
        v[pc] = red.rows[row][m.ncols]
    return tuple(v)


def inverse(m: QMatrix) -> QMatrix:
    if not m.is_square:
        raise ValueError("only square matrices are invertible")
    n = m.nrows
    red, pivots, rk = rref(m.hstack(QMatrix.identity(n)))
    if rk < n or pivots[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return QMatrix([r[n:] for r in red.rows], n)


def det(m: QMatrix) -> Fraction:
    """Bareiss fraction-free determinant."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    # scale to integers so every Bareiss division is exact in Z
    den = lcm(*(x.denominator for r in m.rows for x in r))
    a = [[int(x * den) for x in r] for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return Fraction(0)
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den**n)


def det_cofactor(m: QMatrix) -> Fraction:
    """Cofactor expansion; an independent check on :func:`det`."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    return det_ring([list(r) for r in m.rows], Fraction(0), Fraction(1))


def det_ring(entries: Sequence[Sequence[R]], zero: R, one: R) -> R:
    """Determinant over any commutative ring by memoised Laplace expansion.

    Division-free, so it serves polynomial matrices; cost is O(n 2^n) ring
    products which is fine at the sizes used here (n <= 8).
    """
    n = len(entries)
    memo: dict[int, R] = {}

    def minor(mask: int) -> R:
        if mask in memo:
            return memo[mask]
        row = mask.bit_count()
        if row == n:
            return one
        total = zero
        skipped = 0
        for c in range(n):
            if mask >> c & 1:
                continue
            e = entries[row][c]
            if e:
                term = e * minor(mask | 1 << c)
                total = total + term if skipped % 2 == 0 else total - term
            skipped += 1
        memo[mask] = total
        return total

    return minor(0)


def charpoly(m: QMatrix, var: str = "t") -> Poly:
    """Monic ``det(t I - m)`` by Faddeev-LeVerrier."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    if n == 0:
        raise ValueError("empty matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = QMatrix.zeros(n, n)
    ident = QMatrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ mk).trace() / k
    return Poly(coeffs, var)


def solve_sylvester(y: QMatrix, rhs: QMatrix) -> tuple[QMatrix, list[QMatrix]] | None:
    """Solve ``X Y - Y X = rhs``.

    Returns ``(X0, kernel)`` with ``kernel`` a basis of the centraliser of
    ``Y``, or None when the system is inconsistent.
    """
    if not (y.is_square and rhs.is_square) or y.nrows != rhs.nrows:
        raise ValueError("Y and the right-hand side must be square of equal size")
    n = y.nrows
    if rhs.trace() != 0:
        return None
    # unknown X[a][b] sits at index a*n + b; (XY - YX)[i][j] = sum_k X[i][k]Y[k][j] - Y[i][k]X[k][j]
    rows = []
    for i, j in product(range(n), repeat=2):
        coef = [Fraction(0)] * (n * n)
        for k in range(n):
            coef[i * n + k] += y.rows[k][j]
            coef[k * n + j] -= y.rows[i][k]
        rows.append(coef)
    system = QMatrix(rows, n * n)
    flat_rhs = [rhs.rows[i][j] for i, j in product(range(n), repeat=2)]
    sol = solve(system, flat_rhs)
    if sol is None:
        return None

    def as_matrix(v):
        return QMatrix([v[i * n:(i + 1) * n] for i in range(n)], n)

    return as_matrix(sol), [as_matrix(v) for v in nullspace(system)]


def iter_rationals(rng, count: int, span: int = 3, max_den: int = 2) -> Iterator[Fraction]:
    """Small random rationals ``a/d`` with ``|a| <= span``, ``1 <= d <= max_den``."""
    for _ in range(count):
        yield Fraction(rng.randint(-span, span), rng.randint(1, max_den))
