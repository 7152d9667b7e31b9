import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from screenlab.core import (
    PhaseExponent,
    PoleError,
    PreconditionError,
    beta,
    binomial,
    binomial_row,
    cycle_factor,
    is_integer,
    parse_rational,
    parse_rational_list,
    phase_eval,
    phase_table,
)


@pytest.fixture
def rng():
    """Seeded generator for randomized properties"""
    return np.random.default_rng(20240611)


def random_fraction(rng, bound: int = 40) -> Fraction:
    return Fraction(int(rng.integers(-bound * 7, bound * 7)), int(rng.integers(1, 12)))


@pytest.mark.unit
class TestParseRational:

    def test_plain_and_fraction(self):
        """Test 'p' and 'p/q' parse exactly"""
        assert parse_rational("3") == 3
        assert parse_rational("-1/2") == Fraction(-1, 2)
        assert parse_rational(" 14/7 ") == 2

    def test_list(self):
        """Test comma lists"""
        assert parse_rational_list("1/3,1/5") == [Fraction(1, 3), Fraction(1, 5)]
        assert parse_rational_list("") == []

    @pytest.mark.parametrize("text", ["0.5", "1/0", "a/b", "1//2"])
    def test_rejects(self, text):
        """Test decimals and malformed input are rejected"""
        with pytest.raises(PreconditionError):
            parse_rational(text)

    def test_rejects_float(self):
        """Test floats are never accepted as exponents"""
        with pytest.raises(PreconditionError, match="exact rationals"):
            parse_rational(0.5)


@pytest.mark.unit
class TestIsInteger:

    def test_examples(self):
        """Test the integrality predicate on reduced rationals"""
        assert is_integer(Fraction(3, 1))
        assert not is_integer(Fraction(-1, 2))
        assert is_integer(Fraction(14, 7))


@pytest.mark.unit
class TestPhaseEval:

    def test_quarter_turns(self):
        """Test exact values on multiples of a quarter turn"""
        assert phase_eval(PhaseExponent(Fraction(0))) == 1
        assert phase_eval(PhaseExponent(Fraction(1))) == -1
        assert phase_eval(PhaseExponent(Fraction(1, 2))) == 1j

    def test_equality_mod_two(self):
        """Test exponents are compared mod 2"""
        assert PhaseExponent(Fraction(1, 3)) == PhaseExponent(Fraction(7, 3))
        assert PhaseExponent(Fraction(-1, 2)) == PhaseExponent(Fraction(3, 2))

    def test_large_argument(self):
        """Test reduction mod 2 before trigonometry"""
        assert phase_eval(Fraction(6 * 10**12 + 1, 3)) == pytest.approx(phase_eval(Fraction(1, 3)), abs=1e-15)

    def test_multiplicative(self, rng):
        """Test phase(a)·phase(b) = phase(a+b)"""
        for _ in range(200):
            a, b = random_fraction(rng), random_fraction(rng)
            assert abs(phase_eval(a) * phase_eval(b) - phase_eval(a + b)) < 1e-14
            assert PhaseExponent(a) * PhaseExponent(b) == PhaseExponent(a + b)

    def test_cycle_factor(self):
        """Test (e^{2πix}−1)/(2πi) at x = 1/2"""
        assert cycle_factor(Fraction(1, 2)) == pytest.approx(1j / math.pi)

    def test_phase_table(self):
        """Test the cached table lists e^{πi j/N} for j < 2N and is read-only"""
        table = phase_table(7)
        assert table.shape == (14,)
        for j in range(14):
            assert table[j] == phase_eval(Fraction(j, 7))
        assert phase_table(7) is table
        with pytest.raises(ValueError):
            table[0] = 0


@pytest.mark.unit
class TestBeta:

    def test_trivial(self):
        """Test B(1,1) = 1 and B(2,1) = 1/2"""
        assert beta(1, 1) == pytest.approx(1)
        assert beta(2, 1) == pytest.approx(0.5)

    def test_against_quadrature(self):
        """Test B(6/5, 8/7) against direct integration"""
        expected, _ = integrate.quad(lambda z: z ** 0.2 * (1 - z) ** (1 / 7), 0, 1, epsabs=1e-14, epsrel=1e-13)
        assert beta(Fraction(6, 5), Fraction(8, 7)).real == pytest.approx(expected, rel=1e-11)

    def test_negative_non_integer(self):
        """Test reflection region: B(−1/2, 1) = Γ(−1/2)/Γ(1/2) = −2"""
        assert beta(Fraction(-1, 2), 1).real == pytest.approx(-2.0, rel=1e-13)

    @pytest.mark.parametrize("a,b", [(0, 1), (Fraction(-2), Fraction(1, 2)), (Fraction(1, 2), Fraction(-1, 2))])
    def test_poles(self, a, b):
        """Test non-positive integer arguments raise PoleError"""
        with pytest.raises(PoleError):
            beta(a, b)

    def test_symmetry_and_recurrence(self, rng):
        """Test B(a,b) = B(b,a) and B(a+1,b) = B(a,b)·a/(a+b)"""
        for _ in range(100):
            a = Fraction(int(rng.integers(1, 300)), int(rng.integers(7, 13)))
            b = Fraction(int(rng.integers(1, 300)), int(rng.integers(7, 13)))
            ab, ba = beta(a, b), beta(b, a)
            assert abs(ab - ba) <= 1e-13 * abs(ab)
            assert abs(beta(a + 1, b) - ab * float(a / (a + b))) <= 1e-12 * abs(ab)


@pytest.mark.unit
class TestBinomial:

    def test_exact(self):
        """Test exact generalized binomials"""
        assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
        assert binomial(-1, 5) == -1
        assert binomial(3, 5) == 0
        assert binomial(Fraction(1, 2), -1) == 0

    def test_row_matches_scalar(self):
        """Test the vectorized row against the scalar recursion"""
        row = binomial_row(Fraction(1, 7), 30)
        for k in (0, 1, 5, 29):
            assert row[k] == pytest.approx(float(binomial(Fraction(1, 7), k)), rel=1e-12)

    def test_row_negative_integer(self):
        """Test C(−2, k) = (−1)^k (k+1)"""
        row = binomial_row(-2, 6)
        assert row == pytest.approx([1, -2, 3, -4, 5, -6])
