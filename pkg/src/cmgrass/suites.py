"""Property suites over partitions and sampled points, with reproducible reports."""

from __future__ import annotations

import json
import random
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import prod
from typing import Callable, Iterator

from . import serialize as ser
from .baker import (
    annihilator_span,
    cell_from_solution_space,
    classify_cell,
    cperp_span,
    diff_op,
    is_fuchsian,
    operator_from_roots,
    proportional_ops,
    same_z_span,
    solution_space,
)
from .cm import (
    CMPoint,
    bispectral,
    factorize,
    fixed_point,
    fourier,
    negate,
    rho,
    sample_cm,
    scale,
    spectra,
    split_y,
    star,
    tau_cm,
    translate,
)
from .exact import MultiPoly, Poly, det_ring, proportional
from .partitions import (
    Partition,
    contents,
    contents_residue,
    dim_irrep,
    frobenius_form,
    hom_dim_characters,
    lr_multiplicity,
    multinomial,
    part,
    partitions_of,
    schubert_pairing,
    schur_in_t,
    size,
    transpose,
)
from .quasi import pair, tau_at_x, tau_qe, wronskian
from .window import cell_of_window, eta, maximal_support, omega_gr_member, pluecker, sample_window_cell

SUITES = (
    "fixed-points",
    "residues",
    "tau-schur",
    "eta-cells",
    "wronskian-fiber",
    "factorization",
    "involutions",
    "dimension-identities",
    "baker-operators",
)


@dataclass(frozen=True)
class SuiteConfig:
    name: str
    n_max: int = 5
    seed: int = 0
    samples: int = 100
    jobs: int = 1


@dataclass(frozen=True)
class Case:
    key: str
    inputs: dict
    check: Callable[[], bool]


@dataclass(frozen=True)
class Witness:
    suite: str
    key: str
    inputs: dict
    error: str | None


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    n_max: int
    seed: int
    samples: int
    run: int
    passed: int
    failed: int
    errors: int
    breakdown: tuple[tuple[str, int, int, int], ...] = ()
    witnesses: tuple[Witness, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> str:
        doc = asdict(self)
        doc["breakdown"] = [dict(zip(("suite", "run", "passed", "failed"), b)) for b in self.breakdown]
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_table(self) -> str:
        lines = [f"{'suite':<22}{'run':>7}{'passed':>8}{'failed':>8}"]
        for name, run, passed, failed in self.breakdown:
            lines.append(f"{name:<22}{run:>7}{passed:>8}{failed:>8}")
        lines.append(f"{'total (' + self.suite + ')':<22}{self.run:>7}{self.passed:>8}{self.failed:>8}")
        lines.append(f"n_max={self.n_max} seed={self.seed} samples={self.samples}")
        for w in self.witnesses:
            lines.append(f"FAIL {w.suite} {w.key}: {w.error or 'check returned false'}")
            lines.append("  " + json.dumps(w.inputs, sort_keys=True))
        return "\n".join(lines)


def case_seed(seed: int, suite: str, key: str) -> int:
    return zlib.crc32(f"{seed}:{suite}:{key}".encode())


def all_partitions(n_max: int, n_min: int = 1) -> Iterator[Partition]:
    for n in range(n_min, n_max + 1):
        yield from partitions_of(n)


def lam_key(lam: Partition) -> str:
    return f"n={size(lam)}|lambda={','.join(map(str, lam)) or '0'}"


# ---------------------------------------------------------------------------
# sampling helpers


def random_jordan_data(n: int, rng: random.Random, clusters: int) -> list[tuple[int, list[int]]]:
    """Distinct integer eigenvalues with Jordan types taken from diagonal-hook sizes."""
    points = rng.sample(range(-3, 4), clusters)
    cuts = sorted(rng.sample(range(1, n), clusters - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    out = []
    for b, k in zip(points, sizes):
        lam = rng.choice(partitions_of(k))
        out.append((b, [ni for ni, _ in frobenius_form(lam)]))
    return out


def sample_point(n: int, seed: int, clusters: int | None = None) -> CMPoint:
    """A sampled point with split Y; falls back to cyclic Jordan data."""
    rng = random.Random(seed)
    k = clusters if clusters is not None else rng.randint(1, min(n, 3))
    for attempt in range(10):
        data = random_jordan_data(n, rng, k)
        if attempt >= 5:
            data = [(b, [sum(js)]) for b, js in data]
        s = rng.randrange(2**31)
        P = sample_cm(split_y(data, s), s)
        if P is not None:
            return P
    raise RuntimeError(f"no sample found for n={n}, seed={seed}")


def det_x_plus(P: CMPoint) -> Poly:
    n = P.n
    m = [[Poly([P.X[a, b], int(a == b)], "x") for b in range(n)] for a in range(n)]
    return det_ring(m, Poly([], "x"), Poly([1], "x")).monic()


def point_inputs(P: CMPoint, **extra) -> dict:
    return {"point": ser.enc_cm_point(P), **extra}


# ---------------------------------------------------------------------------
# suites


def suite_fixed_points(cfg: SuiteConfig) -> Iterator[Case]:
    for lam in all_partitions(cfg.n_max):

        def check(lam=lam) -> bool:
            P = fixed_point(lam)
            v, w = P.rank_one_factors()
            factor_ok = all(P.defect()[i, j] == v[i] * w[j] for i in range(P.n) for j in range(P.n))
            return factor_ok and is_fuchsian(P) and classify_cell(P) == ((Fraction(0), lam),)

        yield Case(lam_key(lam), {"lambda": list(lam)}, check)


def suite_residues(cfg: SuiteConfig) -> Iterator[Case]:
    for lam in all_partitions(cfg.n_max):

        def check(lam=lam) -> bool:
            sp = rho(fixed_point(lam))
            res = contents_residue(lam)[1]
            res_t = contents_residue(transpose(lam))[1]
            inverted = {-e: c for e, c in res.items()}
            return sp.split and sp.roots == contents(transpose(lam)) and inverted == res_t

        yield Case(lam_key(lam), {"lambda": list(lam)}, check)


def tau_from_pluecker(W, m: int) -> MultiPoly:
    acc = None
    for mu, c in pluecker(W).items():
        if c:
            term = schur_in_t(mu, m) * c
            acc = term if acc is None else acc + term
    return acc


def suite_tau_schur(cfg: SuiteConfig) -> Iterator[Case]:
    for lam in all_partitions(min(cfg.n_max, 6)):
        n = size(lam)

        def check(lam=lam, n=n) -> bool:
            P = fixed_point(lam)
            fixed_ok = proportional(tau_cm(P, n), schur_in_t(lam, n))
            C = solution_space(P)
            return fixed_ok and all(proportional(tau_cm(P, m), tau_qe(C, m)) for m in (1, 2, 3))

        yield Case(lam_key(lam) + "|fixed", {"lambda": list(lam)}, check)
    per_lam = max(1, cfg.samples // 10)
    for lam in all_partitions(min(cfg.n_max, 5)):
        for s in range(per_lam):
            key = f"{lam_key(lam)}|window={s:03d}"
            W = sample_window_cell(lam, 0, case_seed(cfg.seed, "tau-schur", key))

            def check(W=W) -> bool:
                tau = tau_qe(eta(W), W.n)
                return proportional(tau, tau_from_pluecker(W, W.n)) and tau_at_x(tau).monic() == wronskian(eta(W)).wr

            yield Case(key, {"window": ser.enc_window(W)}, check)
    for n in range(1, min(cfg.n_max, 4) + 1):
        for s in range(cfg.samples):
            key = f"n={n}|bridge={s:03d}"
            P = sample_point(n, case_seed(cfg.seed, "tau-schur", key))

            def check(P=P) -> bool:
                C = solution_space(P)
                return all(proportional(tau_cm(P, m), tau_qe(C, m)) for m in (1, 2, 3))

            yield Case(key, point_inputs(P), check)


def suite_eta_cells(cfg: SuiteConfig) -> Iterator[Case]:
    for lam in all_partitions(cfg.n_max):
        n = size(lam)
        for s in range(cfg.samples):
            key = f"{lam_key(lam)}|window={s:03d}"
            W = sample_window_cell(lam, 0, case_seed(cfg.seed, "eta-cells", key))

            def check(W=W, lam=lam, n=n) -> bool:
                C = eta(W)
                wr = wronskian(C)
                return (
                    cell_of_window(W) == lam
                    and omega_gr_member(C, transpose(lam))
                    and wr.canonical
                    and wr.degree == n
                    and maximal_support(pluecker(W)) == [lam]
                )

            yield Case(key, {"window": ser.enc_window(W), "lambda": list(lam)}, check)


def wronskian_check(P: CMPoint) -> bool:
    C = solution_space(P)
    dims_ok = C.support == tuple(sorted((-b, m) for b, m in spectra(P)[0].roots.items()))
    return dims_ok and wronskian(C).wr == det_x_plus(P)


def suite_wronskian_fiber(cfg: SuiteConfig) -> Iterator[Case]:
    for lam in all_partitions(min(cfg.n_max, 6)):
        yield Case(lam_key(lam) + "|fixed", {"lambda": list(lam)}, lambda lam=lam: wronskian_check(fixed_point(lam)))
    for n in range(1, cfg.n_max + 1):
        for s in range(cfg.samples):
            key = f"n={n}|sample={s:03d}"
            P = sample_point(n, case_seed(cfg.seed, "wronskian-fiber", key))
            yield Case(key, point_inputs(P), lambda P=P: wronskian_check(P))


def factorization_check(P: CMPoint) -> bool:
    blocks = factorize(P)
    pi = spectra(P)[0].divisor
    recomposed = tuple((b, B.n) for b, B in blocks)
    blocks_ok = all(spectra(B)[0].divisor == ((b, B.n),) for b, B in blocks)
    cells = classify_cell(P)
    from_blocks = tuple((b, cell) for (b, B) in blocks for _, cell in classify_cell(translate(B, b)))
    return (
        sum(B.n for _, B in blocks) == P.n
        and recomposed == pi
        and blocks_ok
        and cells == from_blocks
        and cells == cell_from_solution_space(P)
        and all(size(c) == B.n for (_, c), (_, B) in zip(cells, blocks))
    )


def suite_factorization(cfg: SuiteConfig) -> Iterator[Case]:
    for n in range(2, cfg.n_max + 1):
        for s in range(cfg.samples):
            key = f"n={n}|sample={s:03d}"
            P = sample_point(n, case_seed(cfg.seed, "factorization", key), clusters=2)
            yield Case(key, point_inputs(P), lambda P=P: factorization_check(P))


def involution_check(P: CMPoint, alpha: Fraction, b: Fraction) -> bool:
    ok = bispectral(bispectral(P)) == P and star(star(P)) == P and negate(negate(P)) == P
    ok = ok and fourier(fourier(fourier(fourier(P)))) == P
    ok = ok and star(P) == fourier(bispectral(negate(P)))
    # tau(scale(P, a))(t) = a^-n tau(P)(a^i t_i)
    m = 3
    lhs = tau_cm(scale(P, alpha), m)
    rhs = MultiPoly(lhs.vars, {e: c * alpha ** (sum((i + 1) * k for i, k in enumerate(e)) - P.n) for e, c in tau_cm(P, m).terms.items()})
    ok = ok and lhs == rhs
    shifted = spectra(translate(P, b))[0].charpoly
    return ok and shifted == spectra(P)[0].charpoly.shift(b)


def suite_involutions(cfg: SuiteConfig) -> Iterator[Case]:
    for lam in all_partitions(min(cfg.n_max, 6)):

        def check(lam=lam) -> bool:
            P = fixed_point(lam)
            return classify_cell(star(P)) == ((Fraction(0), transpose(lam)),) and involution_check(P, Fraction(2), Fraction(1))

        yield Case(lam_key(lam), {"lambda": list(lam)}, check)
    for n in range(1, cfg.n_max + 1):
        for s in range(max(1, cfg.samples // 10)):
            key = f"n={n}|sample={s:03d}"
            cs = case_seed(cfg.seed, "involutions", key)
            P = sample_point(n, cs)
            rng = random.Random(cs)
            alpha = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
            b = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            yield Case(key, point_inputs(P, alpha=ser.enc_rational(alpha), b=ser.enc_rational(b)), lambda P=P, a=alpha, b=b: involution_check(P, a, b))


def multipartitions(n: int) -> Iterator[tuple[Partition, ...]]:
    """Multisets of nonempty partitions with total size n, in a canonical order."""

    def rec(left: int, bound: tuple) -> Iterator[tuple[Partition, ...]]:
        if left == 0:
            yield ()
            return
        for k in range(left, 0, -1):
            for mu in partitions_of(k):
                key = (k, mu)
                if bound and key > bound:
                    continue
                for rest in rec(left - k, key):
                    yield (mu,) + rest

    yield from rec(n, ())


@dataclass(frozen=True)
class IntersectRecord:
    character_dim: int
    lr_dim: int
    schubert_dim: int
    agree: bool


def intersect_dims(lam: Partition, q_blocks: list[int], mus: list[Partition], sgn_twist: bool = True) -> IntersectRecord:
    """Three independent counts of <sigma_{lam^t}, prod sigma_mu> (lam itself without the twist)."""
    n = size(lam)
    if sum(q_blocks) != n or [size(m) for m in mus] != list(q_blocks):
        raise ValueError("blocks must match the shapes and sum to |lambda|")
    target = transpose(lam) if sgn_twist else lam
    ch = hom_dim_characters(lam, q_blocks, mus, sgn_twist)
    lr = lr_multiplicity(target, mus)
    sch = schubert_pairing(target, mus, n)
    return IntersectRecord(ch, lr, sch, ch == lr == sch)


def induced_dimension(mus: tuple[Partition, ...]) -> int:
    """dim Ind_{S_q}^{S_n}(mu^(1) x ... x mu^(k)) = |S_n / S_q| prod dim mu^(i)."""
    return multinomial([size(m) for m in mus]) * prod(dim_irrep(m) for m in mus)


def lr_sum(n: int, mus: tuple[Partition, ...]) -> int:
    """sum over lam |- n of c^lam_mu, unweighted."""
    return sum(lr_multiplicity(lam, mus) for lam in partitions_of(n))


def induced_dimension_sum(n: int, mus: tuple[Partition, ...]) -> int:
    """sum over lam |- n of dim(lam) c^lam_mu, the dimension of the induced module."""
    return sum(dim_irrep(lam) * lr_multiplicity(lam, mus) for lam in partitions_of(n))


def dimension_check(n: int, mus: tuple[Partition, ...], with_schubert: bool) -> bool:
    blocks = [size(m) for m in mus]
    if induced_dimension_sum(n, mus) != induced_dimension(mus):
        return False
    for lam in partitions_of(n):
        for twist in (True, False):
            target = transpose(lam) if twist else lam
            if hom_dim_characters(lam, blocks, mus, twist) != lr_multiplicity(target, mus):
                return False
        if with_schubert and not intersect_dims(lam, blocks, list(mus)).agree:
            return False
    return True


def suite_dimension_identities(cfg: SuiteConfig) -> Iterator[Case]:
    for n in range(1, min(cfg.n_max, 6) + 1):
        for mus in multipartitions(n):
            key = f"n={n}|mu={'/'.join(','.join(map(str, m)) for m in mus)}"
            yield Case(key, {"mu": [list(m) for m in mus]}, lambda n=n, mus=mus: dimension_check(n, mus, n <= 5))


def baker_check(lam: Partition) -> bool:
    n = size(lam)
    P = fixed_point(lam)
    lt = transpose(lam)
    e = [n + part(lt, i) - (i + 1) for i in range(n)]
    if not proportional_ops(diff_op(P), operator_from_roots(e)):
        return False
    if n > 5:
        return True
    return cperp_check(P)


def cperp_check(P: CMPoint) -> bool:
    C = solution_space(P)
    D = diff_op(P)
    if any(D.apply(b, g) for b, g in C.basis()):
        return False
    cp = cperp_span(P, 2 * P.n)
    orth = all(pair(c, f) == 0 for c in C.basis() for f in cp)
    return orth and same_z_span(cp, annihilator_span(C, 2 * P.n), 2 * P.n)


def suite_baker_operators(cfg: SuiteConfig) -> Iterator[Case]:
    for lam in all_partitions(min(cfg.n_max, 6)):
        yield Case(lam_key(lam), {"lambda": list(lam)}, lambda lam=lam: baker_check(lam))
    for n in range(1, cfg.n_max + 1):
        for s in range(max(1, cfg.samples // 10)):
            key = f"n={n}|sample={s:03d}"
            P = sample_point(n, case_seed(cfg.seed, "baker-operators", key))
            yield Case(key, point_inputs(P), lambda P=P: cperp_check(P))


GENERATORS: dict[str, Callable[[SuiteConfig], Iterator[Case]]] = {
    "fixed-points": suite_fixed_points,
    "residues": suite_residues,
    "tau-schur": suite_tau_schur,
    "eta-cells": suite_eta_cells,
    "wronskian-fiber": suite_wronskian_fiber,
    "factorization": suite_factorization,
    "involutions": suite_involutions,
    "dimension-identities": suite_dimension_identities,
    "baker-operators": suite_baker_operators,
}


def _run_single(cfg: SuiteConfig) -> SuiteReport:
    results = []
    for case in GENERATORS[cfg.name](cfg):
        try:
            ok, err = bool(case.check()), None
        except Exception as exc:  # a raised invariant is recorded, not propagated
            ok, err = False, f"{type(exc).__name__}: {exc}"
        results.append((case.key, ok, err, case.inputs))
    results.sort(key=lambda r: r[0])
    witnesses = tuple(Witness(cfg.name, k, inp, err) for k, ok, err, inp in results if not ok)
    passed = sum(1 for r in results if r[1])
    return SuiteReport(
        cfg.name,
        cfg.n_max,
        cfg.seed,
        cfg.samples,
        len(results),
        passed,
        len(results) - passed,
        sum(1 for r in results if r[2] is not None),
        ((cfg.name, len(results), passed, len(results) - passed),),
        witnesses,
    )


def run_suite(name: str, n_max: int, seed: int, samples: int = 100, jobs: int = 1) -> SuiteReport:
    if name != "all" and name not in GENERATORS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    names = SUITES if name == "all" else (name,)
    cfgs = [SuiteConfig(nm, n_max, seed, samples) for nm in names]
    if jobs > 1 and len(cfgs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_single, cfgs))
    else:
        parts = [_run_single(c) for c in cfgs]
    if len(parts) == 1:
        return parts[0]
    run = sum(p.run for p in parts)
    passed = sum(p.passed for p in parts)
    return SuiteReport(
        "all",
        n_max,
        seed,
        samples,
        run,
        passed,
        run - passed,
        sum(p.errors for p in parts),
        tuple(b for p in parts for b in p.breakdown),
        tuple(w for p in parts for w in p.witnesses),
    )
