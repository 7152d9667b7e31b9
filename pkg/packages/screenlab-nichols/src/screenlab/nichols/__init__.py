from screenlab.core import BraidingMatrix

from .symmetrizer import (
    SymmetrizerBlock,
    apply_symmetrizer,
    hilbert_series,
    is_relation,
    kernel_dimension,
    symmetrizer_blocks,
    symmetrizer_matrix,
)
from .word_combination import WordCombination, quantum_serre


__all__ = [
    BraidingMatrix.__name__,
    # symmetrizer
    SymmetrizerBlock.__name__,
    apply_symmetrizer.__name__,
    hilbert_series.__name__,
    is_relation.__name__,
    kernel_dimension.__name__,
    symmetrizer_blocks.__name__,
    symmetrizer_matrix.__name__,
    # word_combination
    WordCombination.__name__,
    quantum_serre.__name__,
]
