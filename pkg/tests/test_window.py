from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cmgrass.exact import Poly, QMatrix
from cmgrass.partitions import box_complement, contains, partitions_in_box, partitions_of, pivot_set, transpose
from cmgrass.quasi import QuasiExpSpace, pair, wronskian
from cmgrass.window import (
    FlagSpec,
    WindowSubspace,
    cell_of_window,
    eta,
    free_positions,
    maximal_support,
    omega_gr_fixed_point,
    omega_gr_member,
    omega_mu_q_member,
    pluecker,
    sample_window_cell,
    schubert_member,
)

from conftest import partitions, small_rationals

X, X2 = Poly([0, 1]), Poly([0, 0, 1])


def window(n, b, rows):
    return WindowSubspace(n, b, QMatrix(rows, 2 * n))


def pluecker_by_sympy(W: WindowSubspace) -> dict:
    """Independent oracle: sympy minors on the pivot columns of each shape."""
    n = W.n
    m = sympy.Matrix(W.basis.tolist()).applyfunc(sympy.Rational)
    out = {}
    for mu in partitions_in_box(n, n):
        cols = [s + n for s in pivot_set(mu, n)]
        val = sympy.Rational(m.extract(list(range(n)), cols).det())
        out[mu] = Fraction(int(val.p), int(val.q))
    return out


class TestWindow:
    def test_cells(self):
        assert cell_of_window(window(2, 0, [[1, 0, 0, 0], [0, 0, 0, 1]])) == (2,)
        assert cell_of_window(window(2, 0, [[0, 1, 0, 0], [0, 0, 1, 0]])) == (1, 1)

    def test_rejects_wrong_degree(self):
        with pytest.raises(ValueError):
            window(2, 0, [[0, 0, 1, 0], [0, 0, 0, 1]])

    def test_rejects_rank_deficient(self):
        with pytest.raises(ValueError):
            window(2, 0, [[1, 0, 0, 0], [2, 0, 0, 0]])

    def test_zero_sample_is_fixed_point(self):
        W = sample_window_cell((2,), 0, seed=5, zero=True)
        assert W.basis == QMatrix([[1, 0, 0, 0], [0, 0, 0, 1]])

    def test_gap_positions(self):
        assert free_positions((2,), 2) == [(0, 1), (0, 2)]
        W = sample_window_cell((2,), 0, seed=1)
        assert W.basis.rows[1] == (0, 0, 0, 1)

    @given(partitions(1, 6), st.integers(0, 10**6), small_rationals)
    def test_roundtrip(self, lam, seed, b):
        W = sample_window_cell(lam, b, seed)
        assert cell_of_window(W) == lam and W.b == b
        assert len(free_positions(lam, sum(lam))) == sum(lam)

    def test_deterministic(self):
        assert sample_window_cell((2, 1), 1, 7) == sample_window_cell((2, 1), 1, 7)


class TestEta:
    def test_example(self):
        C = eta(window(2, 0, [[1, 0, 0, 0], [0, 0, 0, 1]]))
        assert C.same_space(QuasiExpSpace.polynomial([X, X2]))

    @pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions_of(n)], ids=str)
    def test_fixed_points(self, lam):
        n = sum(lam)
        C = eta(sample_window_cell(lam, 0, 0, zero=True))
        assert C.same_space(QuasiExpSpace.polynomial(omega_gr_fixed_point(transpose(lam), n)))

    @given(partitions(1, 4), st.integers(0, 10**6), small_rationals)
    def test_shift_covariance(self, lam, seed, b):
        W0 = sample_window_cell(lam, 0, seed)
        Wb = WindowSubspace(W0.n, b, W0.basis)
        C0, Cb = eta(W0), eta(Wb)
        assert Cb.support == ((b, W0.n),)
        assert QuasiExpSpace.polynomial(Cb.components[0][1]).same_space(C0)

    @given(partitions(1, 4), st.integers(0, 10**6), small_rationals)
    def test_annihilates(self, lam, seed, b):
        W = sample_window_cell(lam, b, seed)
        n = W.n
        shift = Poly([-b, 1], "z")
        zn_w = [sum((shift ** (k + n) * c for k, c in zip(range(-n, n), row) if c), Poly([], "z")) for row in W.basis.rows]
        C = eta(W)
        assert C.n == n
        assert all(pair(c, f) == 0 for c in C.basis() for f in zn_w)

    @given(partitions(1, 5), st.integers(0, 10**6))
    def test_lands_in_transposed_cell(self, lam, seed):
        C = eta(sample_window_cell(lam, 0, seed))
        n = C.n
        w = wronskian(C)
        assert w.canonical and w.degree == n
        hits = [mu for mu in partitions_in_box(n, n) if schubert_member(C, FlagSpec(), mu)]
        assert hits == [box_complement(transpose(lam), n)]
        assert omega_gr_member(C, transpose(lam))


class TestPluecker:
    def test_fixed_point(self):
        w = pluecker(sample_window_cell((2,), 0, 0, zero=True))
        assert w[(2,)] == 1 and all(v == 0 for mu, v in w.items() if mu != (2,))

    @given(partitions(1, 4), st.integers(0, 10**6))
    def test_matches_sympy_and_support(self, lam, seed):
        W = sample_window_cell(lam, 0, seed)
        w = pluecker(W)
        assert w == pluecker_by_sympy(W)
        assert maximal_support(w) == [lam]
        assert all(contains(lam, mu) for mu, v in w.items() if v)

    @given(partitions(1, 4), st.integers(0, 10**6))
    def test_projective_under_basis_change(self, lam, seed):
        W = sample_window_cell(lam, 0, seed)
        n = W.n
        g = QMatrix.from_function(n, n, lambda i, j: 1 if i <= j else 0)
        mixed = g @ W.basis
        # RREF canonicalises the basis, so the projective vector is identical
        assert pluecker(WindowSubspace(n, 0, mixed)) == pluecker(W)


class TestSchubert:
    def test_examples(self):
        V = [X, X2]
        assert schubert_member(V, FlagSpec(), (1, 1))
        assert not schubert_member(V, FlagSpec(), (2,))

    @pytest.mark.parametrize("lam", [lam for n in range(1, 5) for lam in partitions_of(n)], ids=str)
    def test_fixed_point_membership_is_exclusive(self, lam):
        n = sum(lam)
        V = omega_gr_fixed_point(lam, n)
        hits = [mu for mu in partitions_of(n) if omega_gr_member(V, mu)]
        assert hits == [lam]

    def test_rejects_dependent_basis(self):
        with pytest.raises(ValueError):
            schubert_member([X, X * 2], FlagSpec(), (1,))

    def test_rejects_large_degree(self):
        with pytest.raises(ValueError):
            schubert_member([Poly.monomial(2, 1)], FlagSpec(), (1,))

    def test_omega_mu_q(self):
        q = Fraction(3, 2)
        assert omega_mu_q_member([Poly([-q, 1])], [q], [(1,)])
        assert not omega_mu_q_member([Poly([-2, 1])], [q], [(1,)])
        assert omega_mu_q_member([X, X2], [0, 1], [(), ()])
        assert omega_mu_q_member([X, X2], [], [])
        with pytest.raises(ValueError):
            omega_mu_q_member([X], [1, 1], [(1,), ()])

    @given(small_rationals, small_rationals)
    def test_flag_at_point_is_translate_of_flag_at_zero(self, q, r):
        V = [Poly([-q, 1]) * Poly([-r, 1]), Poly([-q, 1])]
        shifted = [p.shift(q) for p in V]
        for mu in partitions_in_box(2, 2):
            assert schubert_member(V, FlagSpec(q), mu) == schubert_member(shifted, FlagSpec(0), mu)
