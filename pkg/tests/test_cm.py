from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from cmgrass.baker import classify_cell
from cmgrass.cm import (
    CMPoint,
    NonSplitSpectrum,
    NotCMPoint,
    bispectral,
    daha_z1_matrix,
    factorize,
    fixed_point,
    fourier,
    jordan_block,
    negate,
    rho,
    sample_cm,
    scalar_point,
    scale,
    spectra,
    spectrum,
    split_y,
    star,
    tau_cm,
    transform,
    translate,
    validate,
)
from cmgrass.exact import MultiPoly, Poly, QMatrix, charpoly, commutator, rank, proportional
from cmgrass.partitions import contents, partitions_of, schur_in_t, t_vars, transpose
from cmgrass.suites import sample_point

from conftest import small_rationals

FIX2 = fixed_point((2,))
FIX11 = fixed_point((1, 1))


def tau_by_sympy(P: CMPoint, m: int) -> MultiPoly:
    """Independent oracle: sympy determinant of X + sum i t_i (-Y)^(i-1)."""
    ts = sympy.symbols(f"t1:{m + 1}")
    X = sympy.Matrix(P.X.tolist()).applyfunc(sympy.Rational)
    Y = sympy.Matrix(P.Y.tolist()).applyfunc(sympy.Rational)
    M = X + sum(((i + 1) * ts[i] * (-Y) ** i for i in range(m)), sympy.zeros(P.n))
    poly = sympy.Poly(sympy.expand(M.det()), *ts)
    vs = t_vars(m)
    out = MultiPoly(vs)
    for exps, c in poly.terms():
        term = MultiPoly.const(vs, Fraction(int(c.p), int(c.q)))
        for v, e in zip(vs, exps):
            for _ in range(e):
                term = term * MultiPoly.var(vs, v)
        out = out + term
    return out


class TestValidate:
    def test_scalar(self):
        P = scalar_point(3, Fraction(-1, 2))
        assert P.n == 1 and P.defect() == QMatrix([[1]])

    def test_two_by_two(self):
        P = validate(QMatrix([[0, 0], [-1, 0]]), jordan_block(2))
        assert P.defect() == QMatrix.diag([2, 0])
        v, w = P.rank_one_factors()
        assert QMatrix([[a * b for b in w] for a in v], 2) == P.defect()

    def test_rejects_with_rank(self):
        with pytest.raises(NotCMPoint) as err:
            validate(QMatrix.zeros(2, 2), QMatrix.zeros(2, 2))
        assert err.value.rank == 2

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValueError):
            validate(QMatrix.zeros(2, 2), QMatrix.zeros(3, 3))


class TestFixedPoints:
    def test_examples(self):
        assert fixed_point((1,)) == scalar_point(0, 0)
        assert FIX2.X == QMatrix([[0, 0], [-1, 0]]) and FIX2.Y == QMatrix([[0, 1], [0, 0]])
        assert FIX11.X == QMatrix([[0, 0], [1, 0]]) and FIX11.Y == QMatrix([[0, 1], [0, 0]])

    @pytest.mark.parametrize("lam", [lam for n in range(1, 8) for lam in partitions_of(n)], ids=str)
    def test_valid_and_residues(self, lam):
        P = fixed_point(lam)
        assert rank(P.defect()) == 1
        assert rho(P).roots == Counter({Fraction(c): k for c, k in contents(transpose(lam)).items()})
        assert charpoly(P.Y) == Poly.monomial(P.n, 1, "t")


class TestSpectra:
    def test_rho_examples(self):
        assert rho(FIX2).roots == Counter({0: 1, -1: 1})
        assert rho(FIX11).roots == Counter({0: 1, 1: 1})
        assert rho(scalar_point(2, 3)).roots == Counter({6: 1})

    def test_spectra_examples(self):
        pi, varpi = spectra(FIX2)
        assert pi.divisor == ((0, 2),)
        pi, varpi = spectra(scalar_point(5, 7))
        assert pi.divisor == ((7, 1),) and varpi.charpoly == Poly([-5, 1], "t")

    def test_nonsplit(self):
        sp = spectrum(QMatrix([[0, -1], [1, 0]]))
        assert not sp.split and sp.divisor is None


class TestTau:
    def test_examples(self):
        vs = t_vars(2)
        t1, t2 = MultiPoly.var(vs, "t1"), MultiPoly.var(vs, "t2")
        assert tau_cm(scalar_point(3, 5), 1) == MultiPoly.var(("t1",), "t1") + 3
        assert tau_cm(FIX2, 2) == t1 * t1 - t2 * 2
        assert tau_cm(FIX11, 2) == t1 * t1 + t2 * 2

    @pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions_of(n)], ids=str)
    def test_fixed_points_are_schur(self, lam):
        n = sum(lam)
        assert proportional(tau_cm(fixed_point(lam), n), schur_in_t(lam, n))

    @given(st.integers(1, 3), st.integers(0, 10**6), st.integers(1, 3))
    def test_matches_sympy(self, n, seed, m):
        P = sample_point(n, seed)
        assert tau_cm(P, m) == tau_by_sympy(P, m)


class TestTransforms:
    def test_bispectral_example(self):
        B = bispectral(FIX2)
        assert B.X == QMatrix([[0, 0], [1, 0]]) and B.Y == QMatrix([[0, -1], [0, 0]])

    def test_scale_zero(self):
        with pytest.raises(ValueError):
            scale(FIX2, 0)
        with pytest.raises(ValueError):
            transform(FIX2, "rotate")

    @given(st.integers(1, 4), st.integers(0, 10**6))
    def test_involutions(self, n, seed):
        P = sample_point(n, seed)
        for f in (bispectral, star, negate):
            assert f(f(P)) == P
        assert fourier(fourier(fourier(fourier(P)))) == P
        assert star(P) == fourier(bispectral(negate(P)))

    @given(st.integers(1, 4), st.integers(0, 10**6), small_rationals)
    def test_translate_shifts_spectrum(self, n, seed, b):
        P = sample_point(n, seed)
        assert spectrum(translate(P, b).Y).charpoly == spectrum(P.Y).charpoly.with_var("t").shift(b)

    @given(st.integers(1, 3), st.integers(0, 10**6), small_rationals.filter(bool))
    def test_scale_equivariance(self, n, seed, alpha):
        P = sample_point(n, seed)
        tau = tau_cm(P, 3)
        weights = {e: alpha ** (sum((i + 1) * k for i, k in enumerate(e)) - n) for e in tau.terms}
        expected = MultiPoly(tau.vars, {e: c * weights[e] for e, c in tau.terms.items()})
        assert tau_cm(scale(P, alpha), 3) == expected

    @pytest.mark.parametrize("lam", [lam for n in range(1, 6) for lam in partitions_of(n)], ids=str)
    def test_star_transposes_cells(self, lam):
        assert classify_cell(star(fixed_point(lam))) == ((0, transpose(lam)),)


class TestSampling:
    def test_diagonal_family(self):
        P = sample_cm(QMatrix.diag([0, 1]), seed=3)
        assert P is not None and rank(P.defect()) == 1
        assert P.X[0, 1] * P.X[1, 0] == -1

    def test_scalar(self):
        P = sample_cm(QMatrix([[0]]), seed=0)
        assert P is not None and P.Y == QMatrix([[0]])

    def test_jordan_block(self):
        P = sample_cm(jordan_block(2), seed=1)
        assert P is not None and P.Y == jordan_block(2)
        assert classify_cell(P) in (((0, (2,)),), ((0, (1, 1)),))

    def test_deterministic(self):
        assert sample_cm(jordan_block(3), seed=9) == sample_cm(jordan_block(3), seed=9)

    @given(st.integers(1, 5), st.integers(0, 10**6))
    def test_rank_one_defect(self, n, seed):
        P = sample_point(n, seed)
        v, w = P.rank_one_factors()
        assert commutator(P.X, P.Y) + QMatrix.identity(n) == QMatrix([[a * b for b in w] for a in v], n)


class TestFactorize:
    def test_example(self):
        P = validate(QMatrix([[0, 1], [-1, 0]]), QMatrix.diag([0, 1]))
        assert factorize(P) == [(0, scalar_point(0, 0)), (1, scalar_point(0, 1))]

    def test_single_block(self):
        assert factorize(FIX2) == [(0, FIX2)]

    def test_nonsplit(self):
        Y = QMatrix([[0, -1], [1, 0]])
        P = sample_cm(Y, seed=0)
        assert P is not None
        with pytest.raises(NonSplitSpectrum):
            factorize(P)

    @given(st.integers(2, 5), st.integers(0, 10**6))
    def test_blocks_recompose(self, n, seed):
        P = sample_point(n, seed, clusters=2)
        blocks = factorize(P)
        assert sum(B.n for _, B in blocks) == n
        assert Counter({b: B.n for b, B in blocks}) == spectrum(P.Y).roots
        for b, B in blocks:
            assert rank(B.defect()) == 1
            assert spectrum(B.Y).roots == Counter({b: B.n})


class TestDaha:
    def test_examples(self):
        assert daha_z1_matrix([5]) == QMatrix([[5]])
        assert daha_z1_matrix([1, 2]) == QMatrix([[1, -1], [0, 2]])

    @given(st.lists(small_rationals, min_size=1, max_size=5))
    def test_eigenvalues(self, a):
        assert spectrum(daha_z1_matrix(a)).roots == Counter(a)


def test_split_y_spectrum():
    Y = split_y([(0, [2, 1]), (Fraction(3, 2), [1])], seed=4)
    assert spectrum(Y).roots == Counter({0: 3, Fraction(3, 2): 1})
