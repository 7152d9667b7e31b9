import pytest

from screenlab.core import PreconditionError
from screenlab.nichols import WordCombination


@pytest.mark.unit
class TestWordCombination:

    def test_drops_zeros(self):
        """Test zero coefficients are not stored"""
        w = WordCombination({(0, 1): 1, (1, 0): 0})
        assert w.terms == {(0, 1): 1}

    def test_mixed_lengths(self):
        """Test all words must have the same degree"""
        with pytest.raises(PreconditionError, match="mixed lengths"):
            WordCombination({(0,): 1, (0, 1): 1})

    def test_arithmetic(self):
        """Test addition cancels and scaling multiplies"""
        w = WordCombination.word(0, 1) + WordCombination.word(1, 0).scale(2)
        assert (w + WordCombination.word(0, 1).scale(-1)).terms == {(1, 0): 2}
        assert w.degree == 2
        assert w.norm() == pytest.approx(5 ** 0.5)
