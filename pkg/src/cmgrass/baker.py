"""Baker polynomial, its bispectral operator, solution spaces and cells.

Sign convention: the Baker polynomial is ``det((X + x)(Y + z) - 1)``.  With
this choice the solution space C of the operator satisfies
``Wr_C(x) ~ det(x + X)`` and ``tau_C ~ det(X + sum i t_i (-Y)^(i-1))``, and
its component supports are the negated eigenvalues of Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .cm import CMPoint, NonSplitSpectrum, factorize, spectrum, translate
from .exact import MultiPoly, Poly, QMatrix, det_ring, fmt_q, nullspace, rref
from .partitions import Partition, as_partition, transpose
from .quasi import INF, QuasiExpSpace, d_plus, exponents, pair, xpoly

ZX = ("z", "x")


def psi_pol(P: CMPoint) -> MultiPoly:
    """g(z, x) with psi = e^{zx} g; polynomial in (z, x)."""
    n = P.n
    z, x = MultiPoly.var(ZX, "z"), MultiPoly.var(ZX, "x")
    xy = P.X @ P.Y
    entries = []
    for a in range(n):
        row = []
        for b in range(n):
            e = MultiPoly.const(ZX, xy[a, b]) + z * P.X[a, b] + x * P.Y[a, b]
            if a == b:
                e = e + x * z - 1
            row.append(e)
        entries.append(row)
    return det_ring(entries, MultiPoly(ZX), MultiPoly.const(ZX, 1))


@dataclass(frozen=True)
class DiffOperator:
    """D = sum a_{ij} x^j d^i, stored as ``{(i, j): a_ij}``."""

    coeffs: tuple[tuple[tuple[int, int], Fraction], ...]

    @classmethod
    def from_dict(cls, d: dict) -> "DiffOperator":
        return cls(tuple(sorted(((i, j), Fraction(c)) for (i, j), c in d.items() if c)))

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.coeffs)

    @property
    def order(self) -> int:
        return max((i for (i, _), _ in self.coeffs), default=0)

    def apply(self, b, h: Poly) -> Poly:
        """Polynomial part of D(e^{bx} h)."""
        b = Fraction(b)
        out = xpoly([])
        for (i, j), a in self.coeffs:
            out = out + Poly.monomial(j, a, "x") * d_plus(h.with_var("x"), b, i)
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j), a in sorted(self.coeffs, key=lambda t: (-t[0][0], -t[0][1])):
            factors = [f"x^{j}" if j > 1 else "x"] if j else []
            factors += [f"d^{i}" if i > 1 else "d"] if i else []
            mono = "*".join(factors)
            if mono and abs(a) == 1:
                terms.append(("-" if a < 0 else "") + mono)
            else:
                terms.append(fmt_q(a) + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def diff_op(P: CMPoint) -> DiffOperator:
    """Transpose z^i x^j into x^j d^i."""
    g = psi_pol(P)
    return DiffOperator.from_dict({(e[0], e[1]): c for e, c in g.terms.items()})


def operator_from_roots(roots: list[int]) -> DiffOperator:
    """prod_i (x d - e_i); the factors commute since x d is diagonal on x^k."""
    # x d acts on x^k by k, so the product acts by prod (k - e_i); expand in the
    # Euler basis then convert (x d)^m to sum S(m, i) x^i d^i.
    poly = Poly.from_roots(roots, "s")
    out: dict = {}
    for m, c in enumerate(poly.coeffs):
        for i in range(m + 1):
            s = stirling2(m, i)
            if s and c:
                out[(i, i)] = out.get((i, i), 0) + c * s
    return DiffOperator.from_dict(out)


def stirling2(m: int, k: int) -> int:
    return sum((-1) ** (k - j) * comb(k, j) * j**m for j in range(k + 1)) // factorial(k)


def proportional_ops(a: DiffOperator, b: DiffOperator) -> bool:
    da, db = a.as_dict(), b.as_dict()
    if not da or da.keys() != db.keys():
        return False
    key = next(iter(da))
    return all(da[k] * db[key] == db[k] * da[key] for k in da)


def solve_component(D: DiffOperator, b: Fraction, degree_bound: int) -> list[Poly]:
    """Basis of {h : deg h <= degree_bound, D(e^{bx} h) = 0}."""
    images = [D.apply(b, Poly.monomial(k, 1, "x")) for k in range(degree_bound + 1)]
    height = max((p.degree + 1 for p in images), default=0)
    m = QMatrix.from_function(height, degree_bound + 1, lambda r, c: images[c].coeffs[r] if r < len(images[c].coeffs) else 0)
    return [xpoly(v) for v in nullspace(m)]


def solution_space(P: CMPoint) -> QuasiExpSpace:
    """Quasi-exponential solutions of D, one component per eigenvalue of Y."""
    sp = spectrum(P.Y)
    if not sp.split:
        raise NonSplitSpectrum(sp.nonsplit)
    D = diff_op(P)
    comps = []
    for b, mult in sorted(sp.roots.items()):
        sols = solve_component(D, -b, 2 * P.n - 1)
        if len(sols) != mult:
            raise AssertionError(f"expected {mult} solutions at {-b}, found {len(sols)}")
        comps.append((-b, tuple(sols)))
    return QuasiExpSpace(tuple(comps)).canonical()


def cperp_span(P: CMPoint, depth: int) -> list[Poly]:
    """Span of the slices d_x^k (g e^{zx}) at x = 0, cut to z-degree < depth.

    Slices with k < depth + n are used; the intersection with polynomials of
    degree < depth is read off an echelon form with high degrees first.
    """
    n = P.n
    if depth < 2 * n:
        raise ValueError(f"depth must be at least 2n = {2 * n}")
    g = psi_pol(P)
    # g_j(z) = coefficient of x^j in g
    gx = [Poly([0], "z") for _ in range(n + 1)]
    for (ez, ex), c in g.terms.items():
        gx[ex] = gx[ex] + Poly.monomial(ez, c, "z")
    slices = []
    for k in range(depth + n):
        s = Poly([], "z")
        for j in range(min(k, n) + 1):
            if gx[j]:
                s = s + gx[j] * Poly.monomial(k - j, comb(k, j) * factorial(j), "z")
        slices.append(s)
    width = max(s.degree for s in slices) + 1
    rows = [[s.coeffs[width - 1 - c] if width - 1 - c < len(s.coeffs) else 0 for c in range(width)] for s in slices]
    red, pivots, _ = rref(QMatrix(rows, width))
    out = []
    for r, pc in enumerate(pivots):
        if width - 1 - pc < depth:
            out.append(Poly(reversed(red.rows[r]), "z"))
    return sorted(out, key=lambda p: p.degree)


def annihilator_span(C: QuasiExpSpace, depth: int) -> list[Poly]:
    """{f in C[z]_{<depth} : <c, f> = 0 for all c in C}."""
    basis = C.basis()
    m = QMatrix([[pair(c, Poly.monomial(l, 1, "z")) for l in range(depth)] for c in basis], depth)
    return [Poly(v, "z") for v in nullspace(m)]


def same_z_span(a: list[Poly], b: list[Poly], width: int) -> bool:
    def canon(ps):
        m = QMatrix([list(p.coeffs) + [0] * (width - len(p.coeffs)) for p in ps], width)
        red, _, rk = rref(m)
        return red.rows[:rk]

    return canon(a) == canon(b)


MultiPartition = tuple[tuple[Fraction, Partition], ...]


def degrees_to_partition(degrees: tuple[int, ...]) -> Partition:
    """mu_i = d_{n-1-i} + (i+1) - n, transposed."""
    n = len(degrees)
    mu = as_partition(degrees[n - 1 - i] + (i + 1) - n for i in range(n))
    return transpose(mu)


def classify_nilpotent(P: CMPoint) -> Partition:
    """Cell label of a point whose Y is nilpotent."""
    C = solution_space(P)
    if len(C.components) != 1 or C.components[0][0] != 0:
        raise ValueError("expected a nilpotent Y")
    return degrees_to_partition(exponents(C, INF))


def classify_cell(P: CMPoint) -> MultiPartition:
    """Label (eigenvalue of Y, partition) for every block of the factorisation."""
    return tuple((b, classify_nilpotent(translate(block, b))) for b, block in factorize(P))


def cell_from_solution_space(P: CMPoint) -> MultiPartition:
    """The same labels read directly off the components of the full solution space."""
    C = solution_space(P)
    return tuple(
        (-b, degrees_to_partition(exponents(QuasiExpSpace(((0, polys),)), INF)))
        for b, polys in reversed(C.components)
    )


def is_fuchsian(P: CMPoint) -> bool:
    return spectrum(P.Y).charpoly == Poly.monomial(P.n, 1)
