"""The twelve acceptance criteria, each checked exactly.

Proportionality is tested by cross-multiplying coefficient vectors.  Every
test records a verdict that the terminal summary prints as one line per
criterion.
"""

import subprocess
import sys
import time

import pytest

from cmgrass.baker import (
    annihilator_span,
    cell_from_solution_space,
    classify_cell,
    cperp_span,
    diff_op,
    operator_from_roots,
    proportional_ops,
    same_z_span,
    solution_space,
)
from cmgrass.cm import factorize, fixed_point, rho, spectrum, star, tau_cm, translate
from cmgrass.exact import proportional, rank
from cmgrass.partitions import (
    contents,
    dim_irrep,
    hom_dim_characters,
    lr_multiplicity,
    multinomial,
    part,
    partitions_of,
    schur_in_t,
    transpose,
)
from cmgrass.quasi import pair, tau_qe, wronskian
from cmgrass.suites import det_x_plus, multipartitions, sample_point
from cmgrass.window import eta, omega_gr_member, sample_window_cell

from conftest import record


def shapes(n_max: int):
    return [lam for n in range(1, n_max + 1) for lam in partitions_of(n)]


def report(criterion: int, failures: list, total: int, what: str) -> None:
    record(criterion, not failures, f"{total - len(failures)}/{total} {what}")
    assert not failures, failures[:5]


def test_criterion_01_fixed_point_validity():
    lams = shapes(7)
    bad = [lam for lam in lams if rank(fixed_point(lam).defect()) != 1]
    report(1, bad, len(lams), "fixed points with rank-one defect")


def test_criterion_02_residues():
    lams = shapes(7)
    bad = [lam for lam in lams if rho(fixed_point(lam)).roots != contents(transpose(lam))]
    report(2, bad, len(lams), "spectra of YX equal contents of the transpose")


def test_criterion_03_tau_schur():
    lams = shapes(6)
    bad = [lam for lam in lams if not proportional(tau_cm(fixed_point(lam), sum(lam)), schur_in_t(lam, sum(lam)))]
    report(3, bad, len(lams), "tau functions proportional to Schur polynomials")


def test_criterion_04_baker_operators():
    lams = shapes(6)
    bad = []
    for lam in lams:
        n, lt = sum(lam), transpose(lam)
        roots = [n + part(lt, i) - (i + 1) for i in range(n)]
        if not proportional_ops(diff_op(fixed_point(lam)), operator_from_roots(roots)):
            bad.append(lam)
    report(4, bad, len(lams), "operators proportional to Euler products")


def test_criterion_05_wronskian_fiber():
    points = [fixed_point(lam) for lam in shapes(6)]
    points += [sample_point(n, 5000 + s) for n in range(1, 6) for s in range(100)]
    bad = []
    for P in points:
        C = solution_space(P)
        dims_ok = C.support == tuple(sorted((-b, m) for b, m in spectrum(P.Y).roots.items()))
        if not (dims_ok and wronskian(C).wr == det_x_plus(P)):
            bad.append(P)
    report(5, bad, len(points), "solution spaces with Wronskian det(x + X)")


def test_criterion_06_cell_transposition():
    cases = [(lam, s) for lam in shapes(5) for s in range(100)]
    bad = []
    for lam, s in cases:
        C = eta(sample_window_cell(lam, 0, 6000 + s))
        w = wronskian(C)
        if not (omega_gr_member(C, transpose(lam)) and w.canonical and w.degree == sum(lam)):
            bad.append((lam, s))
    report(6, bad, len(cases), "eta images in the transposed cell, canonical")


def test_criterion_07_star_on_cells():
    lams = shapes(6)
    bad = [lam for lam in lams if classify_cell(star(fixed_point(lam))) != ((0, transpose(lam)),)]
    report(7, bad, len(lams), "star images classified by the transpose")


def test_criterion_08_factorization():
    bad, total = [], 0
    for n in range(2, 6):
        for s in range(50):
            P = sample_point(n, 8000 + s, clusters=2)
            total += 1
            blocks = factorize(P)
            ok = len(blocks) == 2
            ok = ok and all(rank(B.defect()) == 1 for _, B in blocks)
            ok = ok and tuple((b, B.n) for b, B in blocks) == spectrum(P.Y).divisor
            from_blocks = tuple((b, lam) for b, B in blocks for _, lam in classify_cell(translate(B, b)))
            ok = ok and from_blocks == cell_from_solution_space(P) == classify_cell(P)
            if not ok:
                bad.append((n, s))
    report(8, bad, total, "two-cluster points factorize and classify blockwise")


def test_criterion_09_tau_bridge():
    points = [fixed_point(lam) for lam in shapes(4)]
    points += [sample_point(n, 9000 + s) for n in range(1, 5) for s in range(25)]
    non_nilpotent = sum(1 for P in points if any(b != 0 for b in spectrum(P.Y).roots))
    bad = []
    for P in points:
        C = solution_space(P)
        if not all(proportional(tau_cm(P, m), tau_qe(C, m)) for m in (1, 2, 3)):
            bad.append(P)
    assert non_nilpotent > 50
    report(9, bad, len(points), f"tau_cm proportional to tau_qe ({non_nilpotent} non-nilpotent)")


@pytest.mark.xfail(strict=True, reason="the unweighted sum of LR coefficients is not the induced dimension")
def test_criterion_10_sum_identity_as_stated():
    cases = [(n, mus) for n in range(1, 7) for mus in multipartitions(n)]
    bad = []
    for n, mus in cases:
        lhs = sum(lr_multiplicity(lam, mus) for lam in partitions_of(n))
        rhs = multinomial([sum(m) for m in mus])
        for m in mus:
            rhs *= dim_irrep(m)
        if lhs != rhs:
            bad.append((mus, lhs, rhs))
    # smallest counterexample: Ind (1,1) x (1) from S_2 x S_1 to S_3 is (2,1) + (1,1,1)
    assert (((1, 1), (1,)), 2, 3) in bad
    report(10, bad, len(cases), "multipartitions satisfy the unweighted sum identity")


def test_criterion_10_oracles_and_weighted_identity():
    cases = [(n, mus) for n in range(1, 7) for mus in multipartitions(n)]
    bad, pairs = [], 0
    for n, mus in cases:
        blocks = [sum(m) for m in mus]
        weighted = sum(dim_irrep(lam) * lr_multiplicity(lam, mus) for lam in partitions_of(n))
        expected = multinomial(blocks)
        for m in mus:
            expected *= dim_irrep(m)
        if weighted != expected:
            bad.append(("weighted", mus))
        for lam in partitions_of(n):
            pairs += 1
            if hom_dim_characters(lam, blocks, list(mus), True) != lr_multiplicity(transpose(lam), mus):
                bad.append((lam, mus))
    report(10, bad, len(cases) + pairs, "weighted sums and character/LR pairs agree")


def test_criterion_11_cperp_orthogonality():
    lams = shapes(5)
    bad = []
    for lam in lams:
        P = fixed_point(lam)
        C = solution_space(P)
        span = cperp_span(P, 2 * P.n)
        orth = all(pair(c, f) == 0 for c in C.basis() for f in span)
        if not (orth and same_z_span(span, annihilator_span(C, 2 * P.n), 2 * P.n)):
            bad.append(lam)
    report(11, bad, len(lams), "slice spans annihilate the solution space")


def test_criterion_12_determinism():
    cmd = [sys.executable, "-m", "cmgrass.cli", "verify", "--suite", "all", "--nmax", "5", "--seed", "42"]
    start = time.monotonic()
    first = subprocess.run(cmd, capture_output=True)
    elapsed = time.monotonic() - start
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == 0 and first.stdout == second.stdout and elapsed < 600
    record(12, ok, f"exit {first.returncode}, identical={first.stdout == second.stdout}, {elapsed:.0f}s per run")
    assert ok
