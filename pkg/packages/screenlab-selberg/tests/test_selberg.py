import math
from fractions import Fraction as Q

import numpy as np
import pytest
from scipy import special

from screenlab.core import Budget, PoleError, PreconditionError, SizeLimit
from screenlab.selberg import (
    SelbergParams,
    SimplexIntegrand,
    selberg,
    selberg_closed_n2,
    selberg_convergent,
    selberg_monte_carlo,
    selberg_product_formula,
    selberg_reduce_first,
)


def params(m, mbar, mm) -> SelbergParams:
    return SelbergParams.from_lists([Q(x) for x in m], [Q(x) for x in mbar], [Q(x) for x in mm])


@pytest.fixture
def table_params():
    """(1/3, 1/5; 0; 1/7), the n = 2 piece of the reference table"""
    return params([Q(1, 3), Q(1, 5)], [0, 0], [Q(1, 7)])


@pytest.mark.unit
class TestConvergence:

    def test_all_zero(self):
        """Test zero exponents converge"""
        assert selberg_convergent(params([0, 0, 0], [0, 0, 0], [0, 0, 0])).ok

    def test_pair_boundary(self):
        """Test m_12 = −1 fails condition (i) on the boundary"""
        check = selberg_convergent(params([0, 0], [0, 0], [-1]))
        assert not check
        assert check.violations[0].startswith("(i) r=1, s=2")

    def test_table_params(self, table_params):
        """Test the reference parameters converge with positive slack"""
        check = selberg_convergent(table_params)
        assert check.ok
        assert check.slack > 0

    def test_endpoint_conditions(self):
        """Test conditions (ii) and (iii) catch the endpoints"""
        assert any(v.startswith("(ii)") for v in selberg_convergent(params([0], [-1], [])).violations)
        assert any(v.startswith("(iii)") for v in selberg_convergent(params([0, -2], [0, 0], [0])).violations)

    def test_divergent_raises(self):
        """Test evaluation refuses divergent parameters"""
        with pytest.raises(PreconditionError, match="diverges"):
            selberg(params([0, 0], [0, 0], [-1]))


@pytest.mark.unit
class TestSelberg:

    def test_empty(self):
        """Test n = 0 is 1"""
        assert selberg(SelbergParams(())).value == 1

    def test_unit_interval(self):
        """Test n = 1 with zero exponents is 1"""
        assert selberg(params([0], [0], [])).value == pytest.approx(1)

    def test_beta(self):
        """Test n = 1 is Euler's Beta, also by forced quadrature"""
        p = params([Q(1, 3)], [Q(-1, 2)], [])
        expected = special.beta(4 / 3, 1 / 2)
        assert selberg(p).value == pytest.approx(expected)
        assert selberg(p, method="quadrature").value == pytest.approx(expected, abs=1e-8)

    def test_simplex_area(self):
        """Test n = 2 with zero exponents is 1/2"""
        assert selberg(params([0, 0], [0, 0], [0])).value == pytest.approx(0.5, abs=1e-9)

    def test_closed_n2_matches_quadrature(self, table_params):
        """Test the n = 2 closed form against quadrature to 1e−8"""
        report = selberg(table_params)
        assert report.method == "quadrature"
        assert report.value == pytest.approx(selberg_closed_n2(Q(1, 3), Q(1, 5), Q(1, 7)), abs=1e-8)

    def test_singular_endpoints(self):
        """Test negative exponents on every face against the closed form"""
        m1, m2, m12 = Q(-1, 2), Q(-1, 3), Q(-1, 2)
        value = selberg(params([m1, m2], [0, 0], [m12])).value
        assert value == pytest.approx(selberg_closed_n2(m1, m2, m12), abs=1e-8)

    def test_positivity(self):
        """Test non-negative exponents give a positive real value"""
        value = selberg(params([Q(1, 2), 0, Q(2, 3)], [Q(1, 3), 0, 0], [Q(1, 5), 0, 1]), tol=1e-6).value
        assert value.real > 0
        assert value.imag == 0

    def test_refinement_honesty(self, table_params):
        """Test a finer run moves the value by less than the coarse error estimate"""
        coarse = selberg(table_params, tol=1e-6)
        fine = selberg(table_params, tol=1e-11)
        assert abs(coarse.value - fine.value) <= coarse.abs_error_estimate + 1e-12

    def test_budget(self, table_params):
        """Test a tiny node budget raises Budget"""
        with pytest.raises(Budget):
            selberg(table_params, node_budget=10)

    def test_method_limits(self):
        """Test quadrature stops at n = 3 and nothing runs beyond n = 6"""
        with pytest.raises(PreconditionError):
            selberg(SelbergParams.uniform(4, 0, 0, 0), method="quadrature")
        with pytest.raises(SizeLimit):
            selberg(SelbergParams.uniform(7, 0, 0, 0))

    def test_asymptotic_decay(self):
        """Test the growth bound ratio stays within [1/10, 10] for m_i = t"""
        m12 = Q(1, 7)
        for t in (8, 16, 32):
            value = selberg(params([t, t], [0, 0], [m12]), tol=1e-12).value.real
            bound = (2 * t) ** (-1 - float(m12)) * t ** -1.0
            assert 0.1 <= value / bound <= 10


@pytest.mark.unit
class TestClosedForms:

    def test_closed_n2_zero(self):
        """Test (0, 0, 0) gives 1/2"""
        assert selberg_closed_n2(0, 0, 0) == pytest.approx(0.5)

    def test_closed_n2_pole(self):
        """Test 2 + m1 + m2 + m12 = 0 is a pole"""
        with pytest.raises(PoleError):
            selberg_closed_n2(Q(-1), Q(-1, 2), Q(-1, 2))

    def test_product_k1_is_beta(self):
        """Test k = 1 reduces to B(a, b)"""
        assert selberg_product_formula(Q(1, 3), Q(5, 2), Q(1, 7), 1) == pytest.approx(special.beta(1 / 3, 5 / 2))

    def test_product_k2(self):
        """Test a = b = 1, c = 1/2 against quadrature of (0; 0; 1)"""
        quadrature = selberg(params([0, 0], [0, 0], [1]), tol=1e-10).value
        assert selberg_product_formula(1, 1, Q(1, 2), 2) == pytest.approx(quadrature, abs=1e-6)
        assert quadrature == pytest.approx(1 / 6, abs=1e-9)

    def test_product_k3(self):
        """Test a = b = 2, c = 1 against 3-d quadrature"""
        quadrature = selberg(SelbergParams.uniform(3, 1, 1, 2), tol=1e-7).value
        assert selberg_product_formula(2, 2, 1, 3) == pytest.approx(quadrature, abs=1e-4)

    def test_product_pole(self):
        """Test a Gamma pole in the product"""
        with pytest.raises(PoleError):
            selberg_product_formula(0, 1, Q(1, 2), 2)

    def test_reduce_n1(self):
        """Test n = 1 reduces to 1/(1 + m_1) times the empty integral"""
        prefactor, reduced = selberg_reduce_first(params([Q(1, 3)], [0], []))
        assert reduced.n == 0
        assert prefactor * selberg(reduced).value == pytest.approx(1 / (1 + 1 / 3))

    def test_reduce_n2_is_closed_form(self, table_params):
        """Test the reduction reproduces the n = 2 closed form"""
        prefactor, reduced = selberg_reduce_first(table_params)
        assert reduced.mbar == (Q(1, 7),)
        value = prefactor * selberg(reduced).value
        assert value == pytest.approx(selberg_closed_n2(Q(1, 3), Q(1, 5), Q(1, 7)), rel=1e-14)

    def test_reduce_n3(self):
        """Test the reduction identity against 3-d quadrature"""
        p = params([Q(1, 3), Q(1, 5), Q(1, 7)], [0, 0, 0], [Q(1, 2), Q(1, 4), Q(1, 6)])
        prefactor, reduced = selberg_reduce_first(p)
        assert reduced.mbar == (Q(1, 2), Q(1, 4))
        assert reduced.mm == {(1, 2): Q(1, 6)}
        reduced_value = prefactor * selberg(reduced, tol=1e-9).value
        assert selberg(p, tol=1e-6).value == pytest.approx(reduced_value, abs=1e-5)

    def test_reduce_rejects(self):
        """Test non-zero m̄ and the prefactor pole"""
        with pytest.raises(PreconditionError):
            selberg_reduce_first(params([0], [1], []))
        with pytest.raises(PoleError):
            selberg_reduce_first(params([Q(-1, 2), Q(-1, 2)], [0, 0], [-1]))


@pytest.mark.unit
class TestMonteCarlo:

    def test_constant_weights_are_exact(self):
        """Test zero exponents give 1/n! with zero variance"""
        report = selberg(SelbergParams.uniform(4, 0, 0, 0))
        assert report.method == "monte_carlo"
        assert report.value == pytest.approx(1 / math.factorial(4), rel=1e-12)

    def test_reproducible(self):
        """Test the same seed gives the same value bit for bit"""
        p = params([Q(1, 3), Q(1, 5)], [0, 0], [Q(1, 7)])
        first = selberg_monte_carlo(p, relative_error=1e-2, seed=11)
        second = selberg_monte_carlo(p, relative_error=1e-2, seed=11)
        assert first.value == second.value

    def test_sample_cap(self, table_params):
        """Test an unreachable error target stops at the sample cap with Budget"""
        with pytest.raises(Budget):
            selberg_monte_carlo(table_params, relative_error=1e-12, seed=1, sample_cap=5_000)

    def test_integrand_is_finite_near_faces(self):
        """Test the mapped integrand stays finite and positive at points next to the cube faces"""
        integrand = SimplexIntegrand(SelbergParams.uniform(4, 0, Q(-1, 3), Q(-2, 5)))
        x = np.array([[1e-300, 0.5, 0.5, 0.5], [0.5, 1.0, 1.0, 1.0], [0.25, 0.5, 0.75, 1e-12]])
        values = integrand(x)
        assert np.all(np.isfinite(values))
        assert np.all(values > 0)


@pytest.mark.system
class TestMonteCarloAccuracy:

    def test_n2_against_closed_form(self, table_params):
        """Test forced Monte Carlo at n = 2 within five standard errors"""
        report = selberg(table_params, method="monte_carlo", seed=5)
        expected = selberg_closed_n2(Q(1, 3), Q(1, 5), Q(1, 7))
        assert abs(report.value - expected) <= 5 * report.abs_error_estimate + 1e-12

    def test_n4_against_product_formula(self):
        """Test n = 4, m_ij = 1/2 against the classical product formula"""
        report = selberg(SelbergParams.uniform(4, 0, 0, Q(1, 2)), seed=3)
        expected = selberg_product_formula(1, 1, Q(1, 4), 4)
        assert abs(report.value - expected) <= 5 * report.abs_error_estimate + 1e-12
        assert abs(report.value - expected) / abs(expected) < 1e-2

    @pytest.mark.parametrize("c", [Q(-1, 5), Q(-1, 6)])
    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_n4_negative_coupling(self, c, seed):
        """Test n = 4 with singular diagonals m_ij = 2c, c > −1/4, converges and matches the product formula"""
        report = selberg(SelbergParams.uniform(4, 0, 0, 2 * c), seed=seed)
        expected = selberg_product_formula(1, 1, c, 4)
        assert report.converged
        assert abs(report.value - expected) / abs(expected) < 1e-2
