"""
Symmetric-group machinery: permutations, inversions, reduced words,
braiding factors along the Matsumoto section and the modified shuffles.

Permutation images are 1-based (σ(i) = images[i−1]); colors are 0-based
generator indices into a BraidingMatrix.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Literal

from .braiding import BraidingMatrix
from .errors import FactorialLimit, PreconditionError
from .numeric import PhaseExponent, phase_eval

type Coloring = tuple[int, ...]
type Strategy = Literal["leftmost", "rightmost"]


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PreconditionError(f"Not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (σ·τ)(i) = σ(τ(i))."""
        return Permutation(tuple(self(other(i)) for i in range(1, other.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        return len(inversions(self))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def reduced_word(self, strategy: Strategy = "leftmost") -> tuple[int, ...]:
        """
        Word (w_1, ..., w_l) with σ = s_{w_1}·...·s_{w_l}, l = length(σ).

        Found by bubble sort: repeatedly right-multiply by the adjacent
        transposition at the leftmost (or rightmost) descent.
        """
        current = list(self.images)
        removed = []
        while True:
            descents = [i for i in range(1, self.n) if current[i - 1] > current[i]]
            if not descents:
                break
            i = descents[0] if strategy == "leftmost" else descents[-1]
            current[i - 1], current[i] = current[i], current[i - 1]
            removed.append(i)
        return tuple(reversed(removed))

    def act_on_word(self, word: tuple) -> tuple:
        """The word f ↦ f∘σ⁻¹, i.e. the letter at position i moves to position σ(i)."""
        result = [None] * self.n
        for i, letter in enumerate(word, start=1):
            result[self(i) - 1] = letter
        return tuple(result)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, k: int) -> "Permutation":
        """The adjacent transposition s_k = (k, k+1) in S_n."""
        images = list(range(1, n + 1))
        images[k - 1], images[k] = images[k], images[k - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, n: int, word: tuple[int, ...]) -> "Permutation":
        result = cls.identity(n)
        for k in word:
            result = result * cls.transposition(n, k)
        return result

    def __str__(self) -> str:
        return "".join(str(x) for x in self.images) if self.n < 10 else ",".join(map(str, self.images))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(images) for images in itertools.permutations(range(1, n + 1))]


def inversions(sigma: Permutation) -> frozenset[tuple[int, int]]:
    """{(i, j) : i < j, σ(i) > σ(j)}"""
    return frozenset(
        (i, j)
        for i in range(1, sigma.n + 1)
        for j in range(i + 1, sigma.n + 1)
        if sigma(i) > sigma(j)
    )


def _check_coloring(q: BraidingMatrix, f: Coloring, n: int) -> None:
    if len(f) != n:
        raise PreconditionError(f"Coloring has length {len(f)}, permutation acts on {n} letters.")
    if any(c < 0 or c >= q.rank for c in f):
        raise PreconditionError(f"Coloring {f} uses colors outside 0..{q.rank - 1}.")


def braiding_factor(
    q: BraidingMatrix, f: Coloring, sigma: Permutation, strategy: Strategy = "leftmost"
) -> PhaseExponent:
    """
    Braiding factor q(σ) of the colored word f along the Matsumoto section.

    Builds σ = s_{w_1}·...·s_{w_l} from a reduced word, right to left, using
    q(id) = 1 and q(s_k·τ) = q_{f(τ⁻¹(k)), f(τ⁻¹(k+1))}·q(τ) while the length grows.

    Args:
        q: braiding matrix
        f: coloring of the positions 1..n (0-based colors)
        sigma: permutation
        strategy: which descent the reduced word is built from

    Returns:
        the phase q(σ)
    """
    _check_coloring(q, f, sigma.n)
    tau_inverse = list(range(1, sigma.n + 1))
    exponent = PhaseExponent.one()
    for k in reversed(sigma.reduced_word(strategy)):
        a, b = tau_inverse[k - 1], tau_inverse[k]
        exponent = exponent * q.phase(f[a - 1], f[b - 1])
        tau_inverse[k - 1], tau_inverse[k] = b, a
    return exponent


def braiding_factor_closed(q: BraidingMatrix, f: Coloring, sigma: Permutation) -> PhaseExponent:
    """∏ over inversions (a<b, σ(a)>σ(b)) of q_{f(a), f(b)}."""
    _check_coloring(q, f, sigma.n)
    exponent = PhaseExponent.one()
    for a, b in inversions(sigma):
        exponent = exponent * q.phase(f[a - 1], f[b - 1])
    return exponent


def shuffles(k: int, n: int) -> list[Permutation]:
    """
    All η ∈ S_n increasing on {1..k} and decreasing on {k+1..n}.

    Ordered lexicographically by the image set η({1..k}).
    """
    if not 0 <= k <= n:
        raise PreconditionError(f"Need 0 <= k <= n, got k={k}, n={n}.")
    result = []
    for head in itertools.combinations(range(1, n + 1), k):
        tail = sorted(set(range(1, n + 1)) - set(head), reverse=True)
        result.append(Permutation(tuple(head) + tuple(tail)))
    return result


def quantum_symmetrizer_coefficients(
    q: BraidingMatrix, f: Coloring, cap: int = 10
) -> dict[Permutation, PhaseExponent]:
    """
    Table σ ↦ q(σ) over S_n for the colored word f.

    Walks the weak order upwards from the identity so that every σ is reached
    from a predecessor of length ℓ(σ)−1 by one inductive step.

    Raises:
        FactorialLimit: when n exceeds cap
    """
    n = len(f)
    if n > cap:
        raise FactorialLimit(f"n={n} exceeds the factorial cap {cap} ({math.factorial(n)} permutations).")
    _check_coloring(q, f, n)
    identity = tuple(range(1, n + 1))
    table: dict[tuple[int, ...], PhaseExponent] = {identity: PhaseExponent.one()}
    # inverse images, keyed by the permutation's images
    frontier = [(identity, identity)]
    while frontier:
        next_frontier = []
        for images, inverse in frontier:
            for k in range(1, n):
                a, b = inverse[k - 1], inverse[k]
                if a > b:
                    continue
                new_images = tuple(k + 1 if x == k else k if x == k + 1 else x for x in images)
                if new_images in table:
                    continue
                table[new_images] = table[images] * q.phase(f[a - 1], f[b - 1])
                new_inverse = list(inverse)
                new_inverse[k - 1], new_inverse[k] = b, a
                next_frontier.append((new_images, tuple(new_inverse)))
        frontier = next_frontier
    return {Permutation(images): phase for images, phase in sorted(table.items())}


def q_factorial(q: complex, n: int) -> complex:
    """[n]_q! = ∏_{k=1..n} (1 + q + ... + q^{k−1})."""
    result = 1 + 0j
    for k in range(1, n + 1):
        result *= sum(q ** j for j in range(k))
    return result


def symmetrizer_sum(table: dict[Permutation, PhaseExponent]) -> complex:
    return sum((phase_eval(phase) for phase in table.values()), 0j)
