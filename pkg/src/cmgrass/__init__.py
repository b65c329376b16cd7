"""Exact computations linking Calogero-Moser points, Schubert cells of
Grassmannians and spaces of quasi-exponential functions."""

from .baker import classify_cell, cperp_span, diff_op, is_fuchsian, psi_pol, solution_space
from .cm import CMPoint, factorize, fixed_point, rho, sample_cm, spectra, tau_cm, transform, validate
from .exact import MultiPoly, Poly, QMatrix, charpoly, rational_root_multiset, rref, solve_sylvester
from .partitions import (
    box_complement,
    character,
    contents_residue,
    dim_irrep,
    frobenius_form,
    hom_dim_characters,
    lr_multiplicity,
    pivot_set,
    schur_in_t,
)
from .quasi import QuasiExpSpace, dual_cell_data, exponents, pair, tau_qe, wronskian
from .suites import intersect_dims, run_suite
from .window import (
    FlagSpec,
    WindowSubspace,
    cell_of_window,
    eta,
    omega_mu_q_member,
    pluecker,
    sample_window_cell,
    schubert_member,
)

__all__ = [
    "CMPoint",
    "FlagSpec",
    "MultiPoly",
    "Poly",
    "QMatrix",
    "QuasiExpSpace",
    "WindowSubspace",
    "box_complement",
    "cell_of_window",
    "character",
    "charpoly",
    "classify_cell",
    "contents_residue",
    "cperp_span",
    "diff_op",
    "dim_irrep",
    "dual_cell_data",
    "eta",
    "exponents",
    "factorize",
    "fixed_point",
    "frobenius_form",
    "hom_dim_characters",
    "intersect_dims",
    "is_fuchsian",
    "lr_multiplicity",
    "omega_mu_q_member",
    "pair",
    "pivot_set",
    "pluecker",
    "psi_pol",
    "rational_root_multiset",
    "rho",
    "rref",
    "run_suite",
    "sample_cm",
    "sample_window_cell",
    "schubert_member",
    "schur_in_t",
    "solution_space",
    "solve_sylvester",
    "spectra",
    "tau_cm",
    "tau_qe",
    "transform",
    "validate",
    "wronskian",
]
