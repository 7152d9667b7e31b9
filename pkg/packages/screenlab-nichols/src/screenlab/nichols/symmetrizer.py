import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy.utilities.iterables import multiset_permutations

from screenlab.core import (
    BraidingMatrix,
    FactorialLimit,
    IllConditioned,
    PreconditionError,
    SizeLimit,
    ordered_map,
    phase_table,
)
from .word_combination import Coloring, WordCombination

logger = logging.getLogger(__name__)

DEFAULT_FACTORIAL_CAP = 10
DEFAULT_COLUMN_CAP = 4096
RANK_EPSILON = 1e-10
PHASE_TABLE_LIMIT = 2048


@dataclass(frozen=True)
class SymmetrizerBlock:
    """Ш_{q,n} restricted to the words with one fixed multiset of colors."""
    multiset: Coloring
    words: tuple[Coloring, ...]
    matrix: np.ndarray


@lru_cache(maxsize=16)
def _permutation_data(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All σ ∈ S_n as 0-based image rows, and the (a, b), a < b, position pairs."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    pairs = np.array(list(itertools.combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
    return perms, pairs


def _check_size(q: BraidingMatrix, n: int, factorial_cap: int, column_cap: int) -> None:
    if n < 0:
        raise PreconditionError(f"Degree must be non-negative, got {n}.")
    if n > factorial_cap:
        raise FactorialLimit(f"n={n} exceeds the factorial cap {factorial_cap}.")
    if q.rank ** n > column_cap:
        raise SizeLimit(f"rank^n = {q.rank}^{n} = {q.rank ** n} exceeds the column cap {column_cap}.")


def _build_block(q: BraidingMatrix, multiset: Coloring) -> SymmetrizerBlock:
    n = len(multiset)
    words = tuple(tuple(word) for word in multiset_permutations(sorted(multiset)))
    index = {word: i for i, word in enumerate(words)}
    block = np.zeros((len(words), len(words)), dtype=complex)
    if n == 0:
        block[0, 0] = 1
        return SymmetrizerBlock(multiset, words, block)
    perms, pairs = _permutation_data(n)
    exponents = q.integer_exponents()
    modulus = 2 * q.denominator
    inverted = perms[:, pairs[:, 0]] > perms[:, pairs[:, 1]]
    rows_of_perm = np.arange(perms.shape[0])[:, None]
    weights = q.rank ** np.arange(n - 1, -1, -1)
    key_to_row = {sum(c * w for c, w in zip(word, weights.tolist())): i for word, i in index.items()}
    for column, f in enumerate(words):
        f = np.array(f, dtype=np.int64)
        pair_exponents = exponents[f[pairs[:, 0]], f[pairs[:, 1]]]
        total = (inverted.astype(np.int64) @ pair_exponents) % modulus
        # letter at position a moves to position σ(a)
        moved = np.empty(perms.shape, dtype=np.int64)
        moved[rows_of_perm, perms] = f[None, :]
        keys = moved @ weights
        rows = np.array([key_to_row[key] for key in keys.tolist()], dtype=np.int64)
        np.add.at(block[:, column], rows, _phases(total, q.denominator))
    return SymmetrizerBlock(multiset, words, block)


def _phases(exponents: np.ndarray, denominator: int) -> np.ndarray:
    if denominator <= PHASE_TABLE_LIMIT:
        return phase_table(denominator)[exponents]
    return np.exp(1j * np.pi * (exponents / denominator))


def symmetrizer_blocks(
    q: BraidingMatrix,
    n: int,
    factorial_cap: int = DEFAULT_FACTORIAL_CAP,
    column_cap: int = DEFAULT_COLUMN_CAP,
    jobs: int = 1,
) -> list[SymmetrizerBlock]:
    """
    The diagonal blocks of Ш_{q,n}, one per multiset of colors.

    Column f holds q_f(σ) in row f∘σ⁻¹ for every σ ∈ S_n, where q_f(σ) is the
    braiding factor of the colored word f.

    Raises:
        FactorialLimit: n above factorial_cap
        SizeLimit: rank^n above column_cap
    """
    _check_size(q, n, factorial_cap, column_cap)
    multisets = list(itertools.combinations_with_replacement(range(q.rank), n))
    return ordered_map(lambda multiset: _build_block(q, multiset), multisets, jobs)


def symmetrizer_matrix(
    q: BraidingMatrix,
    n: int,
    factorial_cap: int = DEFAULT_FACTORIAL_CAP,
    column_cap: int = DEFAULT_COLUMN_CAP,
    jobs: int = 1,
) -> np.ndarray:
    """
    Dense matrix of Ш_{q,n} on the lexicographic word basis of M^{⊗n}.

    Args:
        q: braiding matrix
        n: tensor degree
        factorial_cap: largest admissible n
        column_cap: largest admissible rank^n
        jobs: workers for the block builds

    Returns:
        complex array of shape (rank^n, rank^n)
    """
    blocks = symmetrizer_blocks(q, n, factorial_cap, column_cap, jobs)
    basis = {word: i for i, word in enumerate(itertools.product(range(q.rank), repeat=n))}
    matrix = np.zeros((len(basis), len(basis)), dtype=complex)
    for block in blocks:
        positions = [basis[word] for word in block.words]
        matrix[np.ix_(positions, positions)] = block.matrix
    return matrix


def _ranks(blocks: list[SymmetrizerBlock]) -> list[int]:
    singular_values = [np.linalg.svd(block.matrix, compute_uv=False) for block in blocks]
    sigma_max = max((float(s.max()) for s in singular_values if s.size), default=0.0)
    threshold = RANK_EPSILON * max(sigma_max, 1.0)
    for block, s in zip(blocks, singular_values):
        ambiguous = s[(s > threshold / 10) & (s < threshold * 10)]
        if ambiguous.size:
            raise IllConditioned(
                f"Singular values {ambiguous.tolist()} of block {block.multiset} lie within a decade "
                f"of the rank threshold {threshold:.3g}."
            )
    return [int(np.count_nonzero(s > threshold)) for s in singular_values]


def kernel_dimension(
    q: BraidingMatrix,
    n: int,
    factorial_cap: int = DEFAULT_FACTORIAL_CAP,
    column_cap: int = DEFAULT_COLUMN_CAP,
    jobs: int = 1,
) -> int:
    """dim ker Ш_{q,n}, from singular values of the color blocks."""
    blocks = symmetrizer_blocks(q, n, factorial_cap, column_cap, jobs)
    size = sum(len(block.words) for block in blocks)
    return size - sum(_ranks(blocks))


def hilbert_series(
    q: BraidingMatrix,
    n_max: int,
    factorial_cap: int = DEFAULT_FACTORIAL_CAP,
    column_cap: int = DEFAULT_COLUMN_CAP,
    jobs: int = 1,
) -> list[int]:
    """dim B(M)_n = rank Ш_{q,n} for n = 0..n_max."""
    dims = []
    for n in range(n_max + 1):
        blocks = symmetrizer_blocks(q, n, factorial_cap, column_cap, jobs)
        dims.append(sum(_ranks(blocks)))
        logger.debug(f"dim B(M)_{n} = {dims[-1]}")
    logger.info(f"Hilbert series up to degree {n_max}: {dims}")
    return dims


def apply_symmetrizer(
    q: BraidingMatrix,
    w: WordCombination,
    factorial_cap: int = DEFAULT_FACTORIAL_CAP,
    column_cap: int = DEFAULT_COLUMN_CAP,
) -> WordCombination:
    """Ш_{q,n}(w), computed only on the blocks w touches."""
    n = w.degree
    _check_size(q, n, factorial_cap, column_cap)
    if any(c >= q.rank or c < 0 for c in w.colors()):
        raise PreconditionError(f"Word colors {sorted(w.colors())} exceed the braiding rank {q.rank}.")
    result: dict[Coloring, complex] = {}
    for multiset in sorted({tuple(sorted(word)) for word in w.terms}):
        block = _build_block(q, multiset)
        vector = np.array([w.terms.get(word, 0) for word in block.words], dtype=complex)
        for word, c in zip(block.words, block.matrix @ vector):
            result[word] = complex(c)
    return WordCombination(result)


def is_relation(
    q: BraidingMatrix,
    w: WordCombination,
    tol: float = 1e-9,
    factorial_cap: int = DEFAULT_FACTORIAL_CAP,
    column_cap: int = DEFAULT_COLUMN_CAP,
) -> bool:
    """True iff ‖Ш_{q,n}(w)‖ ≤ tol·‖w‖."""
    image = apply_symmetrizer(q, w, factorial_cap, column_cap)
    return image.norm() <= tol * w.norm()

