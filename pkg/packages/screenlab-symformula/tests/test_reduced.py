import cmath
import math
from fractions import Fraction as Q

import numpy as np
import pytest

from screenlab.core import Permutation, SmallnessError
from screenlab.monodromy import MonodromyParams, f_minus
from screenlab.selberg import selberg_closed_n2
from screenlab.symformula import f_minus_n2_closed, f_tilde, selberg_pieces


def two(m1, m2, m12) -> MonodromyParams:
    return MonodromyParams.from_lists([Q(m1), Q(m2)], [Q(m12)])


@pytest.fixture
def rng():
    """Seeded generator for random fractured parameters"""
    return np.random.default_rng(11)


@pytest.mark.unit
class TestSelbergPieces:

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_count(self, n):
        """Test there are 2ⁿ pieces"""
        assert len(selberg_pieces(MonodromyParams.uniform(n, Q(1, 3), Q(1, 5)))) == 2 ** n

    def test_n2_terms(self):
        """Test the four n = 2 coefficients and their relabeled parameters"""
        m1, m2, m12 = Q(1, 3), Q(1, 5), Q(1, 7)
        pieces = selberg_pieces(two(m1, m2, m12))
        e = lambda x: cmath.exp(1j * math.pi * float(x))
        found = {(piece.k, piece.eta.images): piece for piece in pieces}
        assert set(found) == {(0, (2, 1)), (1, (1, 2)), (1, (2, 1)), (2, (1, 2))}
        assert found[(0, (2, 1))].coefficient == pytest.approx(e(2 * (m1 + m2) + m12))
        assert found[(0, (2, 1))].params.m == (m2, m1)
        assert found[(1, (1, 2))].coefficient == pytest.approx(-e(2 * m2))
        assert found[(1, (2, 1))].coefficient == pytest.approx(-e(2 * m2 + m12))
        assert found[(2, (1, 2))].coefficient == pytest.approx(1)
        assert found[(2, (1, 2))].params.m == (m1, m2)


@pytest.mark.unit
class TestFTilde:

    @pytest.mark.parametrize(
        "m1, m2, m12, expected",
        [
            (Q(1, 3), Q(1, 5), Q(1, 7), -0.0007 + 0.0161j),
            (Q(1, 5), Q(1, 3), Q(1, 7), -0.0093 + 0.0132j),
        ],
    )
    def test_reference_values(self, m1, m2, m12, expected):
        """Test the four-decimal reference table"""
        report = f_tilde(two(m1, m2, m12))
        assert report.method == "closed_form"
        assert report.value == pytest.approx(expected, abs=5e-4)

    def test_equal_exponents_vanish(self):
        """Test (−1/3, −1/3; 2/3) is zero"""
        assert abs(f_tilde(two(Q(-1, 3), Q(-1, 3), Q(2, 3))).value) < 1e-6

    def test_single_variable_is_residue(self):
        """Test n = 1 is c(m)/(m+1)"""
        m = Q(2, 5)
        expected = (cmath.exp(2j * math.pi * 0.4) - 1) / (2j * math.pi) / 1.4
        assert f_tilde(MonodromyParams((m,))).value == pytest.approx(expected)

    def test_explicit_n2(self):
        """Test n = 2 against the four Selberg terms written out"""
        m1, m2, m12 = Q(1, 3), Q(1, 5), Q(1, 7)
        e = lambda x: cmath.exp(1j * math.pi * float(x))
        swapped, straight = selberg_closed_n2(m2, m1, m12), selberg_closed_n2(m1, m2, m12)
        expected = (
            e(2 * (m1 + m2) + m12) * swapped - e(2 * m2) * straight - e(2 * m2 + m12) * swapped + straight
        ) / (2j * math.pi) ** 2
        assert f_tilde(two(m1, m2, m12)).value == pytest.approx(expected, abs=1e-14)

    def test_reduction_matches_quadrature(self):
        """Test reduced and unreduced Selberg pieces agree at n = 2"""
        p = two(Q(1, 3), Q(1, 5), Q(1, 7))
        direct = f_tilde(p, tol=1e-9, reduce=False)
        assert direct.method == "quadrature"
        assert direct.value == pytest.approx(f_tilde(p).value, abs=1e-8)

    def test_smallness(self):
        """Test m_12 = −1 violates smallness"""
        with pytest.raises(SmallnessError):
            f_tilde(two(0, 0, -1))

    def test_jobs_do_not_change_value(self):
        """Test the parallel map keeps the reduction order"""
        p = MonodromyParams.from_lists([Q(1, 3), Q(1, 5), Q(2, 7)], [Q(1, 2), Q(1, 3), Q(1, 4)])
        assert f_tilde(p, tol=1e-6, jobs=4).value == f_tilde(p, tol=1e-6, jobs=1).value


@pytest.mark.unit
class TestClosedForm:

    def test_reference_value(self):
        """Test (1/3, 1/5; 1/7) against the reference table"""
        assert f_minus_n2_closed(Q(1, 3), Q(1, 5), Q(1, 7)) == pytest.approx(-0.0148 + 0.0240j, abs=5e-4)

    def test_matches_series(self, rng):
        """Test the Beta closed form against shell summation for m_12 ∈ [1/10, 1)"""
        for _ in range(10):
            m1 = Q(int(rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])), 5)
            m2 = Q(int(rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])), 5)
            m12 = Q(int(rng.integers(1, 7)), 7)
            series = f_minus(two(m1, m2, m12), tol=1e-13, shell_cap=50_000, strict=False)
            assert f_minus_n2_closed(m1, m2, m12) == pytest.approx(series.value, abs=1e-8)

    def test_rejects_integral(self):
        """Test m1 + m12 ∈ ℤ is refused"""
        with pytest.raises(ValueError, match="fractional"):
            f_minus_n2_closed(Q(1, 2), Q(1, 3), Q(1, 2))


@pytest.mark.unit
class TestPermutedPieces:

    def test_swap_reuses_pieces(self):
        """Test swapping the variables permutes the Selberg parameters"""
        p = two(Q(1, 3), Q(1, 5), Q(1, 7))
        swapped = p.permuted(Permutation((2, 1)))
        assert {piece.params for piece in selberg_pieces(p)} == {piece.params for piece in selberg_pieces(swapped)}
