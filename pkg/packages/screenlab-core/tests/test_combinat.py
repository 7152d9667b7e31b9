import math
from fractions import Fraction

import numpy as np
import pytest

from screenlab.core import (
    BraidingMatrix,
    FactorialLimit,
    Permutation,
    PhaseExponent,
    PreconditionError,
    all_permutations,
    braiding_factor,
    braiding_factor_closed,
    inversions,
    phase_eval,
    q_factorial,
    quantum_symmetrizer_coefficients,
    shuffles,
    symmetrizer_sum,
)


@pytest.fixture
def random_braiding():
    """Random rank-3 braiding matrices with small denominators"""
    rng = np.random.default_rng(7)

    def make(rank: int = 3) -> BraidingMatrix:
        return BraidingMatrix(tuple(
            tuple(Fraction(int(rng.integers(0, 24)), int(rng.integers(1, 7))) for _ in range(rank))
            for _ in range(rank)
        ))
    return make


@pytest.mark.unit
class TestPermutation:

    def test_rejects_non_bijection(self):
        """Test images must be a permutation of 1..n"""
        with pytest.raises(PreconditionError):
            Permutation((1, 1, 3))

    def test_composition_and_inverse(self):
        """Test σ·σ⁻¹ = id"""
        sigma = Permutation((3, 1, 4, 2))
        assert (sigma * sigma.inverse()).is_identity()
        assert (sigma.inverse() * sigma).is_identity()

    @pytest.mark.parametrize("strategy", ["leftmost", "rightmost"])
    def test_reduced_word_reproduces(self, strategy):
        """Test the reduced word multiplies back to σ and has length ℓ(σ)"""
        for sigma in all_permutations(4):
            word = sigma.reduced_word(strategy)
            assert len(word) == sigma.length()
            assert Permutation.from_word(4, word) == sigma

    def test_act_on_word(self):
        """Test the letter at position i moves to position σ(i)"""
        assert Permutation((2, 3, 1)).act_on_word(("a", "b", "c")) == ("c", "a", "b")


@pytest.mark.unit
class TestInversions:

    def test_identity(self):
        """Test the identity has no inversions"""
        assert inversions(Permutation.identity(4)) == frozenset()

    def test_swap(self):
        """Test the transposition in S_2"""
        assert inversions(Permutation((2, 1))) == {(1, 2)}

    def test_reversal(self):
        """Test the longest element of S_3"""
        assert inversions(Permutation((3, 2, 1))) == {(1, 2), (1, 3), (2, 3)}


@pytest.mark.unit
class TestBraidingFactor:

    def test_identity(self, random_braiding):
        """Test q(id) = 1"""
        q = random_braiding()
        assert braiding_factor(q, (0, 1, 2), Permutation.identity(3)) == PhaseExponent.one()

    def test_swap_two_colors(self):
        """Test n=2 swap of colors (0,1) gives q_01"""
        q = BraidingMatrix(((0, Fraction(1, 5)), (Fraction(2, 3), 0)))
        assert braiding_factor(q, (0, 1), Permutation((2, 1))) == PhaseExponent(Fraction(1, 5))

    def test_reversal_uniform(self):
        """Test reversal in S_3 with one color gives exponent 3m"""
        m = Fraction(2, 7)
        q = BraidingMatrix.rank_one(m)
        assert braiding_factor(q, (0, 0, 0), Permutation((3, 2, 1))) == PhaseExponent(3 * m)

    def test_reduced_word_independence(self, random_braiding):
        """Test leftmost and rightmost reduced words agree on all of S_4"""
        for _ in range(5):
            q = random_braiding()
            for f in [(0, 1, 2, 0), (2, 2, 1, 0), (1, 0, 2, 2)]:
                for sigma in all_permutations(4):
                    assert braiding_factor(q, f, sigma, "leftmost") == braiding_factor(q, f, sigma, "rightmost")

    def test_matches_closed_form(self, random_braiding):
        """Test the inductive rule equals the product over inversions (a<b, σ(a)>σ(b))"""
        q = random_braiding()
        f = (0, 2, 1, 1)
        for sigma in all_permutations(4):
            assert braiding_factor(q, f, sigma) == braiding_factor_closed(q, f, sigma)

    def test_length_additive(self, random_braiding):
        """Test q_f(σσ') = q_{f∘σ'⁻¹}(σ)·q_f(σ') when lengths add"""
        q = random_braiding()
        f = (0, 1, 2, 0)
        perms = all_permutations(4)
        checked = 0
        for sigma in perms:
            for sigma_prime in perms:
                product = sigma * sigma_prime
                if product.length() != sigma.length() + sigma_prime.length():
                    continue
                moved = sigma_prime.act_on_word(f)
                assert braiding_factor(q, f, product) == braiding_factor(q, moved, sigma) * braiding_factor(q, f, sigma_prime)
                checked += 1
        assert checked > 100

    def test_rejects_bad_coloring(self, random_braiding):
        """Test colorings must match n and the rank"""
        q = random_braiding()
        with pytest.raises(PreconditionError):
            braiding_factor(q, (0, 1), Permutation.identity(3))
        with pytest.raises(PreconditionError):
            braiding_factor(q, (0, 5, 1), Permutation.identity(3))


@pytest.mark.unit
class TestShuffles:

    def test_counts(self):
        """Test |S_{k,n−k}| = C(n,k)"""
        for n in range(0, 9):
            for k in range(0, n + 1):
                assert len(shuffles(k, n)) == math.comb(n, k)

    def test_k1_n2(self):
        """Test the two shuffles of S_2"""
        assert shuffles(1, 2) == [Permutation((1, 2)), Permutation((2, 1))]

    def test_k0_is_reversal(self):
        """Test k=0 gives only the order-reversing permutation"""
        assert shuffles(0, 3) == [Permutation((3, 2, 1))]

    def test_monotone_blocks(self):
        """Test increasing head and decreasing tail"""
        for eta in shuffles(2, 4):
            assert eta(1) < eta(2)
            assert eta(3) > eta(4)

    def test_range(self):
        """Test k outside 0..n is rejected"""
        with pytest.raises(PreconditionError):
            shuffles(3, 2)


@pytest.mark.unit
class TestQuantumSymmetrizerCoefficients:

    def test_n1(self):
        """Test n=1 table"""
        assert quantum_symmetrizer_coefficients(BraidingMatrix.rank_one(Fraction(1, 3)), (0,)) == {
            Permutation((1,)): PhaseExponent.one()
        }

    def test_n2_uniform(self):
        """Test sum of factors is 1+q"""
        m = Fraction(2, 5)
        table = quantum_symmetrizer_coefficients(BraidingMatrix.rank_one(m), (0, 0))
        assert symmetrizer_sum(table) == pytest.approx(1 + phase_eval(m))

    def test_n3_cube_root(self):
        """Test [3]_q! vanishes at q = e^{2πi/3}"""
        table = quantum_symmetrizer_coefficients(BraidingMatrix.rank_one(Fraction(2, 3)), (0, 0, 0))
        assert abs(symmetrizer_sum(table)) < 1e-14

    def test_q_factorial(self):
        """Test the table sum equals [n]_q! for uniform colorings"""
        m = Fraction(3, 11)
        for n in range(1, 6):
            table = quantum_symmetrizer_coefficients(BraidingMatrix.rank_one(m), (0,) * n)
            assert symmetrizer_sum(table) == pytest.approx(q_factorial(phase_eval(m), n), abs=1e-12)

    def test_trivial_braiding(self):
        """Test all q_ij = 1 gives plain symmetrization"""
        q = BraidingMatrix(((0, 0), (0, 0)))
        table = quantum_symmetrizer_coefficients(q, (0, 1, 0, 1))
        assert len(table) == 24
        assert all(phase == PhaseExponent.one() for phase in table.values())

    def test_agrees_with_inductive_rule(self, random_braiding):
        """Test the weak-order walk agrees with braiding_factor"""
        q = random_braiding()
        f = (2, 0, 1, 0)
        table = quantum_symmetrizer_coefficients(q, f)
        for sigma, phase in table.items():
            assert phase == braiding_factor(q, f, sigma)

    def test_factorial_cap(self):
        """Test n above the cap raises FactorialLimit"""
        with pytest.raises(FactorialLimit):
            quantum_symmetrizer_coefficients(BraidingMatrix.rank_one(1), (0,) * 4, cap=3)
