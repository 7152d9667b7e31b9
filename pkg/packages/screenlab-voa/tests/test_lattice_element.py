from fractions import Fraction as Q

import pytest

from screenlab.core import PreconditionError
from screenlab.voa import DiffMonomial, Lattice, LatticePoint, VoaElement


@pytest.fixture
def sl3() -> Lattice:
    """A₂ root lattice"""
    return Lattice.sl3()


@pytest.mark.unit
class TestLattice:

    def test_sl2_roots(self):
        """Test ±α are the only roots of A₁"""
        assert Lattice.sl2().roots() == [LatticePoint.of(-1), LatticePoint.of(1)]

    def test_sl3_roots(self, sl3):
        """Test the six roots of A₂"""
        roots = sl3.roots()
        assert len(roots) == 6
        assert all(sl3.norm(root) == 2 for root in roots)
        assert LatticePoint.of(1, 1) in roots
        assert LatticePoint.of(1, -1) not in roots

    def test_roots_need_integral_gram(self):
        """Test roots are refused on a fractional lattice"""
        with pytest.raises(PreconditionError):
            Lattice.rank_one(Q(2, 3)).roots()

    def test_gram_must_be_symmetric(self):
        """Test a non-symmetric Gram matrix is rejected"""
        with pytest.raises(PreconditionError):
            Lattice(((1, 2), (3, 4)))

    def test_fractional_inner_product(self):
        """Test exact inner products and the common denominator"""
        lattice = Lattice(((Q(2, 3), Q(1, 5)), (Q(1, 5), Q(2, 5))))
        assert lattice.denominator == 15
        assert lattice.inner(lattice.point(1, 1), lattice.point(1, -1)) == Q(2, 3) - Q(2, 5)

    def test_json(self):
        """Test the Gram matrix is written as rational strings and read back"""
        lattice = Lattice.rank_one("2/3")
        assert lattice.to_json() == {"rank": 1, "gram": [["2/3"]]}
        assert Lattice.from_json(lattice.to_json()) == lattice
        with pytest.raises(PreconditionError):
            Lattice.from_json({"rank": 2, "gram": [["2/3"]]})

    def test_point_arithmetic(self):
        """Test sums, negation and rational scaling of lattice points"""
        a, b = LatticePoint.of(1, 2), LatticePoint.of(-1, 1)
        assert a + b == LatticePoint.of(0, 3)
        assert -a == LatticePoint.of(-1, -2)
        assert a * Q(1, 2) == LatticePoint.of(Q(1, 2), 1)
        assert (a * Q(1, 2)).to_json() == ["1/2", 1]
        with pytest.raises(PreconditionError):
            a + LatticePoint.of(1)


@pytest.mark.unit
class TestDiffMonomial:

    def test_degree(self):
        """Test ∂^kφ carries degree k"""
        assert DiffMonomial.from_factors([(0, 1), (0, 1), (1, 3)]).degree == 5
        assert DiffMonomial.one().degree == 0

    def test_normal_form(self):
        """Test repeated factors merge into one power"""
        assert DiffMonomial((((0, 1), 1), ((0, 1), 1))) == DiffMonomial.generator(0, 1, 2)

    def test_no_zeroth_derivative(self):
        """Test ∂⁰φ is not a generator"""
        with pytest.raises(PreconditionError):
            DiffMonomial.generator(0, 0)

    def test_splits(self):
        """Test Δ(∂φ)² = (∂φ)²⊗1 + 2∂φ⊗∂φ + 1⊗(∂φ)²"""
        u, g, one = DiffMonomial.generator(0, 1, 2), DiffMonomial.generator(0, 1), DiffMonomial.one()
        assert set(u.splits()) == {(one, u, 1), (g, g, 2), (u, one, 1)}

    def test_derivative(self):
        """Test ∂(∂φ)² = 2∂φ∂²φ"""
        u = DiffMonomial.generator(0, 1, 2)
        assert u.derivative() == [(2, DiffMonomial.from_factors([(0, 1), (0, 2)]))]


@pytest.mark.unit
class TestVoaElement:

    def test_exponential_derivative(self, sl3):
        """Test ∂e^{φ_β} = ∂φ_β e^{φ_β} expanded in basis directions"""
        beta = sl3.point(1, 2)
        derived = VoaElement.exponential(sl3, beta).derivative()
        assert derived.terms == {
            (DiffMonomial.generator(0), beta): 1,
            (DiffMonomial.generator(1), beta): 2,
        }

    def test_leibniz(self, sl3):
        """Test ∂ is a derivation"""
        a = VoaElement.phi(sl3, sl3.point(1, 0)) * VoaElement.exponential(sl3, sl3.point(0, 1))
        b = VoaElement.phi(sl3, sl3.point(1, 1), 2) + VoaElement.exponential(sl3, sl3.point(-1, 0), 3)
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    def test_grades_add(self, sl3):
        """Test e^{φ_α}e^{φ_β} = e^{φ_{α+β}}"""
        product = VoaElement.exponential(sl3, sl3.point(1, 0)) * VoaElement.exponential(sl3, sl3.point(0, 1))
        assert product == VoaElement.exponential(sl3, sl3.point(1, 1))

    def test_truncation_drops_high_degree(self, sl3):
        """Test terms above the truncation are dropped on construction"""
        v = VoaElement(sl3, {(DiffMonomial.generator(0, 3), sl3.zero()): 1}, truncation=2)
        assert v.is_zero()
        assert VoaElement.phi(sl3, sl3.point(1, 0), 3).truncate(2).is_zero()

    def test_zero_coefficients_dropped(self, sl3):
        """Test v − v stores nothing"""
        v = VoaElement.phi(sl3, sl3.point(1, 1))
        assert (v - v).is_zero()
        assert len(v) == 2

    def test_exactness(self, sl3):
        """Test Fraction coefficients stay exact until a complex factor enters"""
        v = VoaElement.phi(sl3, sl3.point(1, 0)).scale(Q(1, 3))
        assert v.is_exact()
        assert not v.scale(1j).is_exact()
        assert v.max_abs_coeff() == pytest.approx(1 / 3)

    def test_json(self, sl3):
        """Test the JSON layout of one term"""
        v = VoaElement.monomial(sl3, DiffMonomial.generator(1, 2), sl3.point(1, 0), Q(1, 2))
        (entry,) = v.to_json()
        assert entry["monomial"] == [[1, 2, 1]]
        assert entry["lattice"] == [1, 0]
        assert entry["coeff"] == {"re": 0.5, "im": 0.0}
        assert VoaElement.from_json(sl3, v.to_json()) == v
