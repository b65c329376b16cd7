"""Partitions, Schur polynomials in the times t_k, LR coefficients, characters."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .exact import MultiPoly, det_ring

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise: drop trailing zeros, check weak decrease."""
    ps = [int(p) for p in parts]
    while ps and ps[-1] == 0:
        ps.pop()
    if any(p < 0 for p in ps):
        raise ValueError(f"negative part in {ps}")
    if any(a < b for a, b in zip(ps, ps[1:])):
        raise ValueError(f"parts not weakly decreasing: {ps}")
    return tuple(ps)


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """lambda_i with the convention lambda_i = 0 beyond the length."""
    return lam[i] if 0 <= i < len(lam) else 0


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in partitions_of(n - first, first))
    return tuple(out)


def partitions_in_box(rows: int, cols: int) -> tuple[Partition, ...]:
    """Every partition with at most ``rows`` parts, each at most ``cols``."""
    out = []

    def rec(prefix: list[int], cap: int) -> None:
        out.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for p in range(cap, 0, -1):
            rec(prefix + [p], p)

    rec([], cols)
    return tuple(sorted(out, key=lambda p: (sum(p), p)))


@cache
def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(big: Partition, small: Partition) -> bool:
    return len(small) <= len(big) and all(s <= b for s, b in zip(small, big))


def frobenius_form(lam: Partition) -> list[tuple[int, int]]:
    """Diagonal hooks ``(n_i, r_i)``: hook size and leg length plus one.

    Hook ``i`` is the partition ``(n_i - r_i + 1, 1^(r_i - 1))``.
    """
    if not lam:
        raise ValueError("frobenius form of the empty partition")
    lt = transpose(lam)
    out = []
    d = 0
    while d < len(lam) and lam[d] > d:
        arm = lam[d] - d - 1
        leg = lt[d] - d - 1
        out.append((arm + leg + 1, leg + 1))
        d += 1
    return out


def from_frobenius(form: Sequence[tuple[int, int]]) -> Partition:
    """Inverse of :func:`frobenius_form`."""
    k = len(form)
    arms = [n - r for n, r in form]
    legs = [r - 1 for _, r in form]
    rows = [d + 1 + arms[d] for d in range(k)]
    # rows below the Durfee square: row j has #{d : legs[d] >= j - d} boxes
    depth = max((d + 1 + legs[d] for d in range(k)), default=0)
    for j in range(k, depth):
        rows.append(sum(1 for d in range(k) if legs[d] >= j - d))
    return as_partition(rows)


def boxes(lam: Partition) -> Iterator[tuple[int, int]]:
    """(row, col) of every box."""
    for r, p in enumerate(lam):
        for c in range(p):
            yield r, c


def contents(lam: Partition) -> Counter:
    """Multiset of contents ``col - row``."""
    return Counter(c - r for r, c in boxes(lam))


def contents_residue(lam: Partition) -> tuple[Counter, dict[int, int]]:
    """Contents and the residue Laurent polynomial as ``{exponent: coeff}``."""
    cs = contents(lam)
    return cs, dict(sorted(cs.items()))


def pivot_set(lam: Partition, window: int) -> tuple[int, ...]:
    """Pivots ``s_i = i - lambda_i`` lying below ``window``."""
    if part(lam, 0) > window:
        raise ValueError(f"{lam} does not fit a window of size {window}")
    return tuple(i - part(lam, i) for i in range(window))


def box_complement(lam: Partition, n: int) -> Partition:
    """The complement of ``lam`` inside the n x n box."""
    if len(lam) > n or part(lam, 0) > n:
        raise ValueError(f"{lam} does not fit in the {n}x{n} box")
    return as_partition(n - part(lam, n - 1 - i) for i in range(n))


def hook_lengths(lam: Partition) -> list[int]:
    lt = transpose(lam)
    return [lam[r] - c + lt[c] - r - 1 for r, c in boxes(lam)]


def dim_irrep(lam: Partition) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    return factorial(size(lam)) // prod(hook_lengths(lam))


def multinomial(ns: Sequence[int]) -> int:
    return factorial(sum(ns)) // prod(factorial(k) for k in ns)


# ---------------------------------------------------------------------------
# Schur polynomials in the times


def t_vars(m: int) -> tuple[str, ...]:
    return tuple(f"t{i}" for i in range(1, m + 1))


def complete_h_in_t(m: int, kmax: int) -> list[MultiPoly]:
    """h_0..h_kmax with ``sum h_k z^k = exp(-sum_i t_i z^i)``."""
    vs = t_vars(m)
    h = [MultiPoly.const(vs, 1)]
    for k in range(1, kmax + 1):
        acc = MultiPoly(vs)
        for i in range(1, min(k, m) + 1):
            acc = acc + MultiPoly.var(vs, vs[i - 1]) * h[k - i] * (-i)
        h.append(acc * Fraction(1, k))
    return h


def schur_in_t(lam: Partition, m: int) -> MultiPoly:
    """Jacobi-Trudi ``det(h_{lambda_i - i + j})`` in the variables t1..tm."""
    if m < size(lam) or m < 1:
        raise ValueError(f"need at least {max(size(lam), 1)} time variables, got {m}")
    vs = t_vars(m)
    ell = len(lam)
    if ell == 0:
        return MultiPoly.const(vs, 1)
    h = complete_h_in_t(m, part(lam, 0) + ell - 1)
    zero = MultiPoly(vs)

    def entry(i: int, j: int) -> MultiPoly:
        k = lam[i] - i + j
        return h[k] if 0 <= k < len(h) else zero

    return det_ring([[entry(i, j) for j in range(ell)] for i in range(ell)], zero, MultiPoly.const(vs, 1))


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


def horizontal_strips(lam: Partition, k: int, bound: Partition | None = None) -> Iterator[Partition]:
    """Shapes obtained from ``lam`` by adding a horizontal strip of k boxes.

    With ``bound`` only shapes contained in it are produced.
    """
    rows = len(lam) + 1
    if bound is not None:
        rows = min(rows, len(bound))

    def rec(r: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if r == rows:
            if left == 0:
                yield as_partition(acc + list(lam[r:]))
            return
        cur = part(lam, r)
        cap = left if r == 0 else min(left, part(lam, r - 1) - cur)
        if bound is not None:
            cap = min(cap, part(bound, r) - cur)
        for add in range(cap, -1, -1):
            yield from rec(r + 1, left - add, acc + [cur + add])

    if k == 0:
        yield lam
        return
    yield from rec(0, k, [])


def _is_lattice(word: Sequence[int]) -> bool:
    seen: Counter = Counter()
    for x in word:
        seen[x] += 1
        if x > 1 and seen[x] > seen[x - 1]:
            return False
    return True


def lr_product(lam: Partition, mu: Partition, bound: Partition | None = None) -> Counter:
    """Coefficients of ``s_lam * s_mu`` counted by LR tableaux of shape nu/lam."""
    out: Counter = Counter()
    # a filling is a tuple of rows; each row lists labels of the new cells left to right
    states = [(lam, tuple(() for _ in range(len(lam) + len(mu))))]
    for label, k in enumerate(mu, start=1):
        nxt = []
        for shape, fill in states:
            for new in horizontal_strips(shape, k, bound):
                rows = list(fill)
                for r in range(len(new)):
                    grow = new[r] - part(shape, r)
                    if grow:
                        rows[r] = rows[r] + (label,) * grow
                nxt.append((new, tuple(rows)))
        states = nxt
    for shape, fill in states:
        word = [x for row in fill for x in reversed(row)]
        if _is_lattice(word):
            out[shape] += 1
    return out


def lr_multiplicity(target: Partition, factors: Sequence[Partition]) -> int:
    """Coefficient of ``s_target`` in the product of ``s_f`` over the factors."""
    if size(target) != sum(size(f) for f in factors):
        return 0
    current: Counter = Counter({(): 1})
    for f in factors:
        nxt: Counter = Counter()
        for shape, c in current.items():
            for new, d in lr_product(shape, f, bound=target).items():
                if contains(target, new):
                    nxt[new] += c * d
        current = nxt
    return current.get(as_partition(target), 0)


# ---------------------------------------------------------------------------
# symmetric group characters


@cache
def character(lam: Partition, cycle_type: Partition) -> int:
    """Irreducible character value by the Murnaghan-Nakayama rule."""
    if size(lam) != size(cycle_type):
        raise ValueError(f"size mismatch: |{lam}| != |{cycle_type}|")
    if not cycle_type:
        return 1
    k, rest = cycle_type[0], cycle_type[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for i, b in enumerate(beta):
        if b - k < 0 or b - k in occupied:
            continue
        height = sum(1 for c in beta if b - k < c < b)
        new_beta = sorted((c if c != b else b - k for c in beta), reverse=True)
        new_lam = as_partition(new_beta[j] - (ell - 1 - j) for j in range(ell))
        total += (-1) ** height * character(new_lam, rest)
    return total


def centralizer_size(rho: Partition) -> int:
    """z_rho = prod_k k^{m_k} m_k!"""
    return prod(k**m * factorial(m) for k, m in Counter(rho).items())


def sign_of_cycle_type(rho: Partition) -> int:
    return (-1) ** (size(rho) - len(rho))


def hom_dim_characters(
    lam: Partition,
    q_blocks: Sequence[int],
    mu: Sequence[Partition],
    sgn_twist: bool,
) -> int:
    """dim Hom_{S_n}(Ind_{S_q}(mu^(1) x ... x mu^(k) [x sgn]), lam) from characters."""
    n = size(lam)
    if sum(q_blocks) != n or len(q_blocks) != len(mu):
        raise ValueError("blocks must sum to |lambda| and match the number of shapes")
    if any(size(m) != b for m, b in zip(mu, q_blocks)):
        raise ValueError("each shape must partition its block size")
    total = Fraction(0)
    for rhos in product(*(partitions_of(b) for b in q_blocks)):
        weight = Fraction(1)
        for m, rho in zip(mu, rhos):
            chi = character(m, rho)
            if sgn_twist:
                chi *= sign_of_cycle_type(rho)
            weight *= Fraction(chi, centralizer_size(rho))
        if weight:
            union = as_partition(sorted((p for rho in rhos for p in rho), reverse=True))
            total += weight * character(lam, union)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral multiplicity {total}")
    return int(total)


# ---------------------------------------------------------------------------
# Schubert calculus in the n x n box


def pieri_in_box(classes: Counter, k: int, n: int) -> Counter:
    """Multiply a class by the special class sigma_k inside Gr(n, 2n)."""
    box = (n,) * n
    out: Counter = Counter()
    for lam, c in classes.items():
        for new in horizontal_strips(lam, k, box):
            out[new] += c
    return Counter({k_: v for k_, v in out.items() if v})


def giambelli_times(classes: Counter, mu: Partition, n: int) -> Counter:
    """Multiply by sigma_mu expanded as det(sigma_{mu_i - i + j})."""
    ell = len(mu)
    out: Counter = Counter()
    for perm in permutations(range(ell)):
        ks = [mu[i] - i + perm[i] for i in range(ell)]
        if any(k < 0 for k in ks):
            continue
        sign = _perm_sign(perm)
        cur = classes
        for k in ks:
            cur = pieri_in_box(cur, k, n)
        for lam, c in cur.items():
            out[lam] += sign * c
    return Counter({k_: v for k_, v in out.items() if v})


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            sign *= (-1) ** (length - 1)
    return sign


def schubert_pairing(lam: Partition, factors: Sequence[Partition], n: int) -> int:
    """<sigma_lam, prod sigma_f> in Gr(n, 2n) via the point-class coefficient."""
    cur: Counter = Counter({box_complement(lam, n): 1})
    for f in factors:
        cur = giambelli_times(cur, f, n)
    return cur.get((n,) * n, 0)
