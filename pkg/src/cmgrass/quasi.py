"""Homogeneous spaces of quasi-exponentials e^{bx} g(x).

Functions are represented by their polynomial parts; the exponential factor
is carried by the component label ``b``.  Derivatives act through
``d/dx (e^{bx} h) = e^{bx} (d/dx + b) h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .exact import MultiPoly, Poly, QMatrix, det_ring, q, rank, rational_root_multiset, rref
from .partitions import t_vars

INF = "inf"

Component = tuple[Fraction, tuple[Poly, ...]]


def xpoly(coeffs: Iterable) -> Poly:
    return Poly(coeffs, "x")


def coeff_matrix(polys: Sequence[Poly], width: int | None = None) -> QMatrix:
    """Rows of coefficients, ascending degree, padded to a common width."""
    if width is None:
        width = max((p.degree + 1 for p in polys), default=0)
    return QMatrix([list(p.coeffs) + [0] * (width - len(p.coeffs)) for p in polys], width)


def top_down_basis(polys: Sequence[Poly]) -> tuple[Poly, ...]:
    """Canonical basis: monic, distinct degrees, reduced from the top."""
    if not polys:
        return ()
    m = coeff_matrix(polys)
    rev = QMatrix([list(reversed(r)) for r in m.rows], m.ncols)
    red, _, rk = rref(rev)
    out = [xpoly(reversed(r)) for r in red.rows[:rk]]
    return tuple(sorted(out, key=lambda p: p.degree))


@dataclass(frozen=True)
class QuasiExpSpace:
    """Direct sum over distinct b of e^{bx} span(polys)."""

    components: tuple[Component, ...]

    def __post_init__(self) -> None:
        comps = []
        for b, polys in self.components:
            polys = tuple(p.with_var("x") for p in polys)
            if not polys:
                continue
            if rank(coeff_matrix(polys)) != len(polys):
                raise ValueError(f"polynomials of the component at {b} are dependent")
            comps.append((q(b), polys))
        comps.sort(key=lambda c: c[0])
        pts = [b for b, _ in comps]
        if len(set(pts)) != len(pts):
            raise ValueError("component base points must be distinct")
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def polynomial(cls, polys: Sequence[Poly], b=0) -> "QuasiExpSpace":
        return cls(((q(b), tuple(polys)),))

    @property
    def n(self) -> int:
        return sum(len(p) for _, p in self.components)

    @property
    def support(self) -> tuple[tuple[Fraction, int], ...]:
        return tuple((b, len(p)) for b, p in self.components)

    def basis(self) -> list[tuple[Fraction, Poly]]:
        return [(b, g) for b, polys in self.components for g in polys]

    def canonical(self) -> "QuasiExpSpace":
        return QuasiExpSpace(tuple((b, top_down_basis(p)) for b, p in self.components))

    def same_space(self, other: "QuasiExpSpace") -> bool:
        a, c = self.canonical(), other.canonical()
        return a.components == c.components

    def component(self, b) -> tuple[Poly, ...]:
        b = q(b)
        return next((p for c, p in self.components if c == b), ())


def d_plus(h: Poly, b: Fraction, times: int = 1) -> Poly:
    """(d/dx + b)^times applied to h."""
    for _ in range(times):
        h = h.derivative() + h * b
    return h


def pair(c: tuple[object, Poly], f: Poly) -> Fraction:
    """<e^{bx} g, f> = (g(d/dz) f)(b)."""
    b, g = q(c[0]), c[1]
    total = Fraction(0)
    deriv = f
    for k, gk in enumerate(g.coeffs):
        if k:
            deriv = deriv.derivative()
        if gk:
            total += gk * deriv(b)
    return total


@dataclass(frozen=True)
class Wronskian:
    wr: Poly
    degree: int
    canonical: bool


def wronskian(C: QuasiExpSpace) -> Wronskian:
    """Monic Wronskian with the exponential prefactor removed."""
    basis = C.basis()
    n = len(basis)
    if n == 0:
        raise ValueError("Wronskian of the zero space")
    rows = [[d_plus(g, b, i) for b, g in basis] for i in range(n)]
    w = det_ring(rows, xpoly([]), xpoly([1]))
    if not w:
        raise ArithmeticError("basis functions are linearly dependent")
    w = w.monic()
    return Wronskian(w, w.degree, w.degree == n)


def taylor_row(b: Fraction, g: Poly, a: Fraction, width: int) -> list[Fraction]:
    """Taylor coefficients at a of e^{b(x-a)} g(x) up to order width-1."""
    shifted = g.shift(a).coeffs
    exp_series = [b**k / factorial(k) for k in range(width)]
    return [
        sum((exp_series[k - j] * shifted[j] for j in range(min(k + 1, len(shifted)))), Fraction(0))
        for k in range(width)
    ]


def exponents(C: QuasiExpSpace, at) -> tuple[int, ...]:
    """Achievable vanishing orders at a finite point, or degrees at infinity.

    At a finite point each basis element is expanded as e^{b a} times a Taylor
    series; the constant e^{b a} only rescales its row, so the pivot pattern
    of the rational matrix is exact for any support.  At infinity only a
    single-support space has well-defined degrees.
    """
    n = C.n
    if at == INF:
        if len(C.components) != 1:
            raise ValueError("degrees at infinity need a single-support space")
        polys = C.components[0][1]
        m = coeff_matrix(polys)
        rev = QMatrix([list(reversed(r)) for r in m.rows], m.ncols)
        _, pivots, _ = rref(rev)
        return tuple(sorted(m.ncols - 1 - p for p in pivots))
    a = q(at)
    width = n + 1
    while True:
        m = QMatrix([taylor_row(b, g, a, width) for b, g in C.basis()], width)
        _, pivots, rk = rref(m)
        if rk == n:
            return tuple(pivots)
        width *= 2


def singular_points(C: QuasiExpSpace) -> tuple[list[Fraction], Poly]:
    """Rational roots of the Wronskian and its nonsplit remainder."""
    w = wronskian(C).wr
    if w.degree == 0:
        return [], w
    roots, rest = rational_root_multiset(w)
    return sorted(roots), rest


def dual_cell_data(C: QuasiExpSpace) -> tuple[list[tuple[Fraction, tuple[int, ...]]], Poly]:
    """Finite singular points with their exponents, plus the nonsplit part.

    Meaningful for canonical spaces, but computed for any space.
    """
    pts, rest = singular_points(C)
    regular = tuple(range(C.n))
    data = [(a, e) for a in pts if (e := exponents(C, a)) != regular]
    return data, rest


def tau_qe(C: QuasiExpSpace, m: int) -> MultiPoly:
    """det(<c_i, z^j G(z)>) with G = exp(sum t_i z^i), the units cancelled.

    <e^{bx} g, z^j e^{P}> = e^{P(b)} [g(d/dz + P'(z)) z^j](b) with
    P = sum t_i z^i; the factor e^{P(b)} is exactly the prefactor's inverse.
    """
    if m < 1:
        raise ValueError("need at least one time variable")
    vs = ("z",) + t_vars(m)
    ts = t_vars(m)
    z = MultiPoly.var(vs, "z")
    dp = MultiPoly(vs)
    for i in range(1, m + 1):
        dp = dp + MultiPoly.var(vs, f"t{i}") * (z ** (i - 1)) * i

    def op(f: MultiPoly) -> MultiPoly:
        return f.diff("z") + dp * f

    basis = C.basis()
    n = len(basis)
    maxdeg = max(g.degree for _, g in basis)
    rows = []
    # powers[k][j] = (d + P')^k z^j
    powers = [[z**j for j in range(n)]]
    for _ in range(maxdeg):
        powers.append([op(f) for f in powers[-1]])
    for b, g in basis:
        row = []
        for j in range(n):
            acc = MultiPoly(vs)
            for k, gk in enumerate(g.coeffs):
                if gk:
                    acc = acc + powers[k][j] * gk
            row.append(acc.subs({"z": b}).drop(ts))
        rows.append(row)
    return det_ring(rows, MultiPoly(ts), MultiPoly.const(ts, 1))


def tau_at_x(tau: MultiPoly) -> Poly:
    """tau(x, 0, ..., 0) as a polynomial in x."""
    rest = {v: 0 for v in tau.vars[1:]}
    return tau.subs(rest).drop(tau.vars[:1]).to_poly(tau.vars[0]).with_var("x")

