import math
from fractions import Fraction as Q

import pytest

from screenlab.core import NonConvergent
from screenlab.monodromy import res
from screenlab.voa import DiffMonomial, Lattice, VoaElement, diff_poly, yer, zemlja


@pytest.fixture
def fractional() -> Lattice:
    """Rank two with (e₁,e₁) = 2/3, (e₁,e₂) = 1/5, (e₂,e₂) = 2/5"""
    return Lattice(((Q(2, 3), Q(1, 5)), (Q(1, 5), Q(2, 5))))


@pytest.mark.unit
class TestZemlja:

    def test_on_field(self, fractional):
        """Test ζ_α∂φ_β = −(α,β)e^{φ_α}"""
        alpha, beta = fractional.basis(0), fractional.basis(1)
        result = zemlja(alpha, VoaElement.phi(fractional, beta), truncation=None)
        assert result == VoaElement.exponential(fractional, alpha, Q(-1, 5))

    def test_on_two_fields(self, fractional):
        """Test ζ_α(∂φ_β∂φ_γ) = (−(α,β)∂φ_γ − (α,γ)∂φ_β + (α,β)(α,γ)∂φ_α)e^{φ_α}"""
        alpha, beta, gamma = fractional.basis(0), fractional.basis(1), fractional.basis(0)
        ab, ag = fractional.inner(alpha, beta), fractional.inner(alpha, gamma)
        phi = lambda x: VoaElement.phi(fractional, x)
        expected = (phi(gamma).scale(-ab) + phi(beta).scale(-ag) + phi(alpha).scale(ab * ag)) * VoaElement.exponential(fractional, alpha)
        assert zemlja(alpha, phi(beta) * phi(gamma), truncation=None) == expected

    def test_negative_integer(self):
        """Test ζ_α e^{φ_β} = P_{α,k}e^{φ_{α+β}} for (α,β) = −k−1"""
        sl2 = Lattice.sl2()
        alpha = sl2.basis(0)
        result = zemlja(alpha, VoaElement.exponential(sl2, alpha * -2), truncation=None)
        assert result == diff_poly(sl2, alpha, 3) * VoaElement.exponential(sl2, -alpha)
        assert result.is_exact()

    def test_nonnegative_integer(self):
        """Test ζ_α e^{φ_β} = 0 for (α,β) ∈ ℕ₀"""
        sl2 = Lattice.sl2()
        alpha = sl2.basis(0)
        assert zemlja(alpha, VoaElement.exponential(sl2, alpha), truncation=None).is_zero()
        assert zemlja(alpha, VoaElement.vacuum(sl2), truncation=None).is_zero()

    def test_fractional_series(self):
        """Test the coefficient of (∂φ_α)^k in ζ_α e^{φ_α} is res(z^{2/3+k})/k!"""
        lattice = Lattice.rank_one(Q(2, 3))
        alpha = lattice.basis(0)
        result = zemlja(alpha, VoaElement.exponential(lattice, alpha), truncation=4)
        assert result.grades() == {alpha * 2}
        assert result.degree == 4
        for k in range(5):
            coefficient = result.coefficient(DiffMonomial.generator(0, 1, k), alpha * 2)
            assert coefficient == pytest.approx(res(Q(2, 3) + k) / math.factorial(k), abs=1e-14)

    def test_fractional_needs_truncation(self):
        """Test an infinite fractional series is refused"""
        lattice = Lattice.rank_one(Q(2, 3))
        alpha = lattice.basis(0)
        with pytest.raises(NonConvergent):
            zemlja(alpha, VoaElement.exponential(lattice, alpha), truncation=None)

    def test_grading(self, fractional):
        """Test ζ_α maps V_β to V_{α+β}"""
        alpha, beta = fractional.basis(1), fractional.point(1, -1)
        v = VoaElement.monomial(fractional, DiffMonomial.from_factors([(0, 1), (1, 2)]), beta)
        assert zemlja(alpha, v, truncation=3).grades() == {alpha + beta}


@pytest.mark.unit
class TestYer:

    def test_eigenvalue(self, fractional):
        """Test yer_α(u e^{φ_β}) = (α,β)u e^{φ_β}"""
        alpha, beta = fractional.basis(0), fractional.point(1, 1)
        v = VoaElement.monomial(fractional, DiffMonomial.generator(1, 2), beta, 3)
        assert yer(alpha, v) == v.scale(Q(2, 3) + Q(1, 5))

    def test_additive(self, fractional):
        """Test yer_{α+α'} = yer_α + yer_{α'} and yer_0 = 0"""
        a, b = fractional.basis(0), fractional.point(-1, 2)
        v = VoaElement.exponential(fractional, fractional.point(1, 0)) + VoaElement.phi(fractional, b) * VoaElement.exponential(fractional, b)
        assert yer(a + b, v) == yer(a, v) + yer(b, v)
        assert yer(fractional.zero(), v).is_zero()
