"""Finite window model of degree-n points and Schubert conditions in C[x]_{2n}.

A point is W = span(rows) + (z-b)^n C[z] where the rows live in the span of
(z-b)^{-n}, ..., (z-b)^{n-1}; column c of the basis matrix holds exponent
c - n.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exact import Poly, QMatrix, det, iter_rationals, nullspace, q, rank, rref
from .partitions import Partition, as_partition, box_complement, contains, part, partitions_in_box, pivot_set, size
from .quasi import INF, QuasiExpSpace, taylor_row, xpoly


@dataclass(frozen=True)
class WindowSubspace:
    n: int
    b: Fraction
    basis: QMatrix

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.basis.shape != (self.n, 2 * self.n):
            raise ValueError(f"basis must be {self.n}x{2 * self.n}, got {self.basis.shape}")
        red, pivots, rk = rref(self.basis)
        if rk != self.n:
            raise ValueError(f"basis has rank {rk}, expected {self.n}")
        lam = _cell(self.n, pivots)
        if size(lam) != self.n:
            raise ValueError(f"pivot set has degree {size(lam)}, expected {self.n}")
        object.__setattr__(self, "b", q(self.b))
        object.__setattr__(self, "basis", red)

    @property
    def pivots(self) -> tuple[int, ...]:
        """Pivot exponents, i.e. lowest terms of the echelon basis."""
        return tuple(p - self.n for p in rref(self.basis)[1])


def _cell(n: int, pivot_cols: Sequence[int]) -> Partition:
    # n strictly increasing pivots below n always give 0 <= i - s_i, weakly decreasing
    return as_partition(i - (c - n) for i, c in enumerate(pivot_cols))


def cell_of_window(W: WindowSubspace) -> Partition:
    return _cell(W.n, [p + W.n for p in W.pivots])


def free_positions(lam: Partition, n: int) -> list[tuple[int, int]]:
    """(row, column) of every free entry of the echelon basis of the cell."""
    cols = [s + n for s in pivot_set(lam, n)]
    return [(i, c) for i, pc in enumerate(cols) for c in range(pc + 1, 2 * n) if c not in cols]


def sample_window_cell(lam: Partition, b, seed: int, zero: bool = False) -> WindowSubspace:
    """Random point of the cell; ``zero=True`` gives the fixed point."""
    n = size(lam)
    if n < 1:
        raise ValueError("need a nonempty partition")
    rng = random.Random(seed)
    rows = [[Fraction(0)] * (2 * n) for _ in range(n)]
    for i, s in enumerate(pivot_set(lam, n)):
        rows[i][s + n] = Fraction(1)
    for i, c in free_positions(lam, n):
        rows[i][c] = Fraction(0) if zero else next(iter_rationals(rng, 1))
    return WindowSubspace(n, q(b), QMatrix(rows))


def eta(W: WindowSubspace) -> QuasiExpSpace:
    """Annihilator of (z-b)^n W inside e^{bx} C[x]_{2n}.

    <e^{bx} x^k, (z-b)^l> = k! delta_{kl}, so a row c of (z-b)^n W imposes
    sum_l l! c_l g_l = 0 on g.
    """
    n = W.n
    m = QMatrix([[r[l] * factorial(l) for l in range(2 * n)] for r in W.basis.rows], 2 * n)
    sols = [xpoly(v) for v in nullspace(m)]
    return QuasiExpSpace.polynomial(sols, W.b).canonical()


def pluecker(W: WindowSubspace) -> dict[Partition, Fraction]:
    """Maximal minors w^mu at columns {i - mu_i} for mu in the n x n box."""
    n = W.n
    out = {}
    for mu in partitions_in_box(n, n):
        cols = [i - part(mu, i) + n for i in range(n)]
        out[mu] = det(W.basis.submatrix(range(n), cols))
    return out


def maximal_support(vec: dict[Partition, Fraction]) -> list[Partition]:
    nz = [mu for mu, c in vec.items() if c]
    return [mu for mu in nz if not any(nu != mu and contains(nu, mu) for nu in nz)]


# ---------------------------------------------------------------------------
# Schubert conditions


@dataclass(frozen=True)
class FlagSpec:
    """The flag at a rational point (``at`` a Fraction) or at infinity."""

    at: object = INF

    def __post_init__(self) -> None:
        if self.at != INF:
            object.__setattr__(self, "at", q(self.at))

    @property
    def at_infinity(self) -> bool:
        return self.at == INF


def _as_polys(V) -> list[Poly]:
    if isinstance(V, QuasiExpSpace):
        if len(V.components) != 1 or V.components[0][0] != 0:
            raise ValueError("Schubert conditions apply to polynomial spaces")
        return list(V.components[0][1])
    return [p.with_var("x") for p in V]


def intersection_dim(V: Sequence[Poly], F: FlagSpec, k: int, ambient: int) -> int:
    """dim(V cap F_k) with F_k of dimension k in C[x]_{ambient}."""
    n = len(V)
    if F.at_infinity:
        cols = [[p.coeffs[d] if d < len(p.coeffs) else 0 for d in range(k, ambient)] for p in V]
    else:
        cols = [taylor_row(Fraction(0), p, F.at, ambient)[: ambient - k] for p in V]
    if not cols or not cols[0]:
        return n
    return n - rank(QMatrix(cols))


def schubert_member(V, F: FlagSpec, lam: Partition) -> bool:
    """All conditions dim(V cap F_k) = i for n+i-lam_{i-1} <= k <= n+i-lam_i."""
    polys = _as_polys(V)
    n = len(polys)
    ambient = 2 * n
    if any(p.degree >= ambient for p in polys):
        raise ValueError(f"basis must lie in C[x]_{ambient}")
    if rank(QMatrix([list(p.coeffs) + [0] * (ambient - len(p.coeffs)) for p in polys])) != n:
        raise ValueError("basis is not independent")
    if len(lam) > n or part(lam, 0) > n:
        raise ValueError(f"{lam} does not fit the {n}x{n} box")
    for i in range(n + 1):
        lo = 0 if i == 0 else n + i - part(lam, i - 1)
        hi = n + i - part(lam, i) if i < n else ambient
        for k in range(max(lo, 0), min(hi, ambient) + 1):
            if intersection_dim(polys, F, k, ambient) != i:
                return False
    return True


def omega_gr_member(V, lam: Partition) -> bool:
    """Membership in the cell attached to lam: Omega_{complement(lam)}(F(inf))."""
    n = len(_as_polys(V))
    return schubert_member(V, FlagSpec(INF), box_complement(lam, n))


def omega_gr_fixed_point(lam: Partition, n: int) -> list[Poly]:
    """span{x^{d_i}}, d_i = n + lam_i - (i+1)."""
    return [Poly.monomial(n + part(lam, i) - (i + 1), 1, "x") for i in range(n)]


def omega_mu_q_member(V, points: Sequence, mus: Sequence[Partition]) -> bool:
    """Conjunction of Schubert conditions at the given points.

    An empty shape contributes no flag, so an empty or all-empty list is
    satisfied by every V.
    """
    pts = [q(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("points must be distinct")
    if len(pts) != len(mus):
        raise ValueError("need one shape per point")
    return all(schubert_member(V, FlagSpec(p), mu) for p, mu in zip(pts, mus) if mu)
