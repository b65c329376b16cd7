"""Calogero-Moser points: pairs (X, Y) with rank([X, Y] + I) = 1."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    MultiPoly,
    Poly,
    QMatrix,
    block_diag,
    charpoly,
    commutator,
    det_ring,
    inverse,
    iter_rationals,
    nullspace,
    q,
    rank,
    rational_root_multiset,
    solve,
    solve_sylvester,
)
from .partitions import Partition, frobenius_form, size, t_vars

SupportDivisor = tuple[tuple[Fraction, int], ...]


class NotCMPoint(ValueError):
    """Raised when rank([X, Y] + I) differs from one."""

    def __init__(self, computed_rank: int):
        super().__init__(f"rank([X,Y] + I) = {computed_rank}, expected 1")
        self.rank = computed_rank


class NonSplitSpectrum(ValueError):
    """Raised when a characteristic polynomial has an irrational factor."""

    def __init__(self, factor: Poly):
        super().__init__(f"spectrum does not split over Q; irreducible part {factor}")
        self.factor = factor


@dataclass(frozen=True)
class CMPoint:
    X: QMatrix
    Y: QMatrix

    def __post_init__(self) -> None:
        if not (self.X.is_square and self.Y.is_square) or self.X.shape != self.Y.shape:
            raise ValueError(f"X and Y must be square of equal size, got {self.X.shape}, {self.Y.shape}")
        if self.X.nrows == 0:
            raise ValueError("n = 0 is not a valid size")
        r = rank(self.defect())
        if r != 1:
            raise NotCMPoint(r)

    @property
    def n(self) -> int:
        return self.X.nrows

    def defect(self) -> QMatrix:
        """The rank-one matrix [X, Y] + I."""
        return commutator(self.X, self.Y) + QMatrix.identity(self.X.nrows)

    def rank_one_factors(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """Vectors (v, w) with [X, Y] + I = v w^T."""
        m = self.defect()
        i0, j0 = next((i, j) for i in range(self.n) for j in range(self.n) if m[i, j])
        v = m.column(j0)
        w = tuple(x / m[i0, j0] for x in m.rows[i0])
        return v, w


def validate(X: QMatrix, Y: QMatrix) -> CMPoint:
    return CMPoint(X, Y)


def scalar_point(x0, y0) -> CMPoint:
    return CMPoint(QMatrix([[x0]]), QMatrix([[y0]]))


def jordan_block(k: int, eigenvalue=0) -> QMatrix:
    """Upper triangular Jordan block."""
    return QMatrix.from_function(k, k, lambda i, j: eigenvalue if i == j else int(j == i + 1))


def fixed_point(lam: Partition) -> CMPoint:
    """The C*-fixed point attached to a partition, assembled from diagonal hooks."""
    if not lam:
        raise ValueError("fixed points are labelled by nonempty partitions")
    form = frobenius_form(lam)
    sizes = [ni for ni, _ in form]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    n = size(lam)
    x = [[Fraction(0)] * n for _ in range(n)]
    y = [[Fraction(0)] * n for _ in range(n)]
    for i, (ni, ri) in enumerate(form):
        o = offsets[i]
        for a in range(ni - 1):
            y[o + a][o + a + 1] = Fraction(1)
        sub = list(range(1, ri)) + [-(ni - ri) + k for k in range(ni - ri)]
        for a, val in enumerate(sub):
            x[o + a + 1][o + a] = Fraction(val)
        for j, (nj, rj) in enumerate(form):
            if i == j:
                continue
            k = rj - ri - 1  # entries at (row, row + k)
            if i > j:
                diag = [ni] * ri + [0] * (ni - ri)
            else:
                diag = [0] * (rj - 1) + [-ni] * (nj - rj + 1)
            cells = [(a, a + k) for a in range(ni) if 0 <= a + k < nj]
            if len(cells) != len(diag):
                raise AssertionError(f"off-diagonal block ({i},{j}) length mismatch")
            for (a, b), val in zip(cells, diag):
                x[offsets[i] + a][offsets[j] + b] = Fraction(val)
    return CMPoint(QMatrix(x), QMatrix(y))


@dataclass(frozen=True)
class Spectrum:
    """A monic characteristic polynomial and its rational roots."""

    charpoly: Poly
    roots: Counter
    nonsplit: Poly

    @property
    def split(self) -> bool:
        return self.nonsplit.degree == 0

    @property
    def divisor(self) -> SupportDivisor | None:
        if not self.split:
            return None
        return tuple(sorted(self.roots.items()))


def spectrum(m: QMatrix) -> Spectrum:
    cp = charpoly(m)
    roots, rest = rational_root_multiset(cp)
    return Spectrum(cp, roots, rest)


def rho(P: CMPoint) -> Spectrum:
    """Spectrum of Z = Y X."""
    return spectrum(P.Y @ P.X)


def spectra(P: CMPoint) -> tuple[Spectrum, Spectrum]:
    """(spectrum of Y, spectrum of X): the maps pi and varpi."""
    return spectrum(P.Y), spectrum(P.X)


def tau_cm(P: CMPoint, m: int) -> MultiPoly:
    """det(X + sum_{i<=m} i t_i (-Y)^(i-1))."""
    if m < 1:
        raise ValueError("need at least one time variable")
    vs = t_vars(m)
    n = P.n
    entries = [[MultiPoly.const(vs, P.X[a, b]) for b in range(n)] for a in range(n)]
    power = QMatrix.identity(n)
    minus_y = -P.Y
    for i in range(1, m + 1):
        ti = MultiPoly.var(vs, vs[i - 1]) * i
        for a in range(n):
            for b in range(n):
                if power[a, b]:
                    entries[a][b] = entries[a][b] + ti * power[a, b]
        power = power @ minus_y
    return det_ring(entries, MultiPoly(vs), MultiPoly.const(vs, 1))


# ---------------------------------------------------------------------------
# involutions and group actions


def bispectral(P: CMPoint) -> CMPoint:
    return CMPoint(P.Y.T, P.X.T)


def star(P: CMPoint) -> CMPoint:
    return CMPoint(-P.X.T, P.Y.T)


def negate(P: CMPoint) -> CMPoint:
    return CMPoint(-P.X, -P.Y)


def fourier(P: CMPoint) -> CMPoint:
    return CMPoint(P.Y, -P.X)


def translate(P: CMPoint, b) -> CMPoint:
    return CMPoint(P.X, P.Y - QMatrix.identity(P.n) * q(b))


def scale(P: CMPoint, alpha) -> CMPoint:
    alpha = q(alpha)
    if alpha == 0:
        raise ValueError("scaling factor must be nonzero")
    return CMPoint(P.X * (1 / alpha), P.Y * alpha)


TRANSFORMS = ("bispectral", "star", "negate", "fourier", "translate", "scale")


def transform(P: CMPoint, kind: str, param=None) -> CMPoint:
    if kind == "bispectral":
        return bispectral(P)
    if kind == "star":
        return star(P)
    if kind == "negate":
        return negate(P)
    if kind == "fourier":
        return fourier(P)
    if kind == "translate":
        return translate(P, param)
    if kind == "scale":
        return scale(P, param)
    raise ValueError(f"unknown transform {kind!r}; choose from {TRANSFORMS}")


def conjugate(P: CMPoint, g: QMatrix) -> CMPoint:
    gi = inverse(g)
    return CMPoint(gi @ P.X @ g, gi @ P.Y @ g)


# ---------------------------------------------------------------------------
# sampling and factorization


def centralizer_basis(Y: QMatrix) -> list[QMatrix]:
    res = solve_sylvester(Y, QMatrix.zeros(Y.nrows, Y.nrows))
    assert res is not None
    return res[1]


def sample_cm(Y: QMatrix, seed: int, attempts: int = 20) -> CMPoint | None:
    """A random point over the given Y, or None if none was found.

    ``v`` is drawn at random; ``w`` is then drawn among solutions of the
    linear consistency conditions ``w^T K v = tr K`` (K in the centraliser of
    Y), which make ``X Y - Y X = v w^T - I`` solvable.
    """
    if not Y.is_square:
        raise ValueError("Y must be square")
    n = Y.nrows
    rng = random.Random(seed)
    cent = centralizer_basis(Y)
    for _ in range(attempts):
        v = list(iter_rationals(rng, n))
        if not any(v):
            continue
        vcol = QMatrix([[x] for x in v])
        rows = [[x for (x,) in (k @ vcol).rows] for k in cent]
        cond = QMatrix(rows, n)
        w0 = solve(cond, [k.trace() for k in cent])
        if w0 is None:
            continue
        w = list(w0)
        for vec in nullspace(cond):
            c = next(iter_rationals(rng, 1))
            w = [a + c * b for a, b in zip(w, vec)]
        rhs = vcol @ QMatrix([w]) - QMatrix.identity(n)
        res = solve_sylvester(Y, rhs)
        if res is None:
            continue
        x0, kernel = res
        X = x0
        for k in kernel:
            X = X + k * next(iter_rationals(rng, 1))
        return CMPoint(X, Y)
    return None


def random_unitriangular(n: int, rng: random.Random, span: int = 2) -> QMatrix:
    """Lower unitriangular integer matrix (determinant one)."""
    return QMatrix.from_function(n, n, lambda i, j: 1 if i == j else (rng.randint(-span, span) if i > j else 0))


def split_y(blocks: Sequence[tuple[object, Sequence[int]]], seed: int) -> QMatrix:
    """A Y with prescribed rational Jordan data, hidden by a random conjugation.

    ``blocks`` is a list of ``(eigenvalue, jordan_sizes)``.
    """
    rng = random.Random(seed)
    jordan = []
    for b, sizes in blocks:
        jordan.extend(jordan_block(k, q(b)) for k in sizes)
    y = block_diag(jordan)
    g = random_unitriangular(y.nrows, rng)
    return inverse(g) @ y @ g


def factorize(P: CMPoint) -> list[tuple[Fraction, CMPoint]]:
    """Split along the generalised eigenspaces of Y, ordered by eigenvalue."""
    sp = spectrum(P.Y)
    if not sp.split:
        raise NonSplitSpectrum(sp.nonsplit)
    n = P.n
    cols: list[tuple[Fraction, ...]] = []
    sizes = []
    for b, mult in sorted(sp.roots.items()):
        shifted = (P.Y - QMatrix.identity(n) * b) ** mult
        basis = nullspace(shifted)
        if len(basis) != mult:
            raise AssertionError("generalised eigenspace has the wrong dimension")
        cols.extend(basis)
        sizes.append((b, mult))
    s = QMatrix([list(c) for c in cols]).T
    conj = conjugate(P, s)
    out = []
    start = 0
    for b, mult in sizes:
        idx = list(range(start, start + mult))
        out.append((b, CMPoint(conj.X.submatrix(idx, idx), conj.Y.submatrix(idx, idx))))
        start += mult
    return out


def daha_z1_matrix(a: Sequence) -> QMatrix:
    """Upper triangular: diagonal a_i, -1 strictly above the diagonal."""
    n = len(a)
    return QMatrix.from_function(n, n, lambda i, j: q(a[i]) if i == j else (-1 if j > i else 0))
