import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from screenlab.core import Permutation, PreconditionError, SmallnessError, is_integer, parse_rational


@dataclass(frozen=True)
class MonodromyParams:
    """
    Arguments (m_i; m_ij) of F±, F̃− and the radii ħ_i.

    Indices are 1-based; mm holds exactly the pairs i < j.
    """
    m: tuple[Fraction, ...]
    mm: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    hbar: tuple[float, ...] | None = None

    def __post_init__(self):
        m = tuple(parse_rational(x) for x in self.m)
        n = len(m)
        if n < 1:
            raise PreconditionError("Need n >= 1 exponents m_i.")
        expected = set(itertools.combinations(range(1, n + 1), 2))
        if set(self.mm) != expected:
            raise PreconditionError(f"mm must define exactly the pairs i<j of 1..{n}, got {sorted(self.mm)}.")
        mm = {pair: parse_rational(self.mm[pair]) for pair in sorted(expected)}
        hbar = None
        if self.hbar is not None:
            hbar = tuple(float(h) for h in self.hbar)
            if len(hbar) != n or any(h <= 0 for h in hbar):
                raise PreconditionError(f"hbar must be {n} positive radii, got {self.hbar}.")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mm", mm)
        object.__setattr__(self, "hbar", hbar)

    def __hash__(self):
        return hash((self.m, tuple(self.mm.items()), self.hbar))

    @property
    def n(self) -> int:
        return len(self.m)

    def pair(self, i: int, j: int) -> Fraction:
        """m_ij for i ≠ j, read symmetrically."""
        return self.mm[(i, j) if i < j else (j, i)]

    def pairs(self) -> list[tuple[int, int]]:
        return list(self.mm)

    def radii(self) -> tuple[float, ...]:
        return self.hbar if self.hbar is not None else (1.0,) * self.n

    def base_exponents(self) -> tuple[Fraction, ...]:
        """m_i + Σ_{j>i} m_ij, the residue exponents at k = 0."""
        return tuple(
            self.m[i - 1] + sum((self.mm[(i, j)] for j in range(i + 1, self.n + 1)), Fraction(0))
            for i in range(1, self.n + 1)
        )

    def total(self) -> Fraction:
        return sum(self.m, Fraction(0)) + sum(self.mm.values(), Fraction(0))

    def permuted(self, sigma: Permutation) -> "MonodromyParams":
        """(m_{σ⁻¹(i)}; m_{σ⁻¹(i)σ⁻¹(j)})"""
        inverse = sigma.inverse()
        return MonodromyParams(
            tuple(self.m[inverse(i) - 1] for i in range(1, self.n + 1)),
            {(i, j): self.pair(inverse(i), inverse(j)) for (i, j) in self.mm},
            self.hbar,
        )

    def shifted(self, k: tuple[int, ...]) -> "MonodromyParams":
        """(m_i + k_i; m_ij)"""
        return MonodromyParams(tuple(x + d for x, d in zip(self.m, k)), self.mm, self.hbar)

    def with_hbar(self, hbar: tuple[float, ...] | None) -> "MonodromyParams":
        return MonodromyParams(self.m, self.mm, hbar)

    @classmethod
    def from_lists(cls, m, mm_upper, hbar=None) -> "MonodromyParams":
        """mm_upper lists m_12, m_13, ..., m_1n, m_23, ... row-major."""
        n = len(m)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        if len(mm_upper) != len(pairs):
            raise PreconditionError(f"Expected {len(pairs)} values m_ij for n={n}, got {len(mm_upper)}.")
        return cls(tuple(m), dict(zip(pairs, mm_upper)), hbar)

    @classmethod
    def uniform(cls, n: int, m_i, m_ij) -> "MonodromyParams":
        return cls.from_lists([parse_rational(m_i)] * n, [parse_rational(m_ij)] * (n * (n - 1) // 2))


def is_fractured(p: MonodromyParams) -> bool:
    """m_i + Σ_{i<j} m_ij ∉ ℤ for every i."""
    return not any(is_integer(b) for b in p.base_exponents())


def smallness_violations(p: MonodromyParams) -> list[tuple[tuple[int, ...], Fraction, int]]:
    """Subsets J with Σ_{i<j ∈ J} m_ij ≤ −|J| + 1, as (J, sum, bound)."""
    violations = []
    for size in range(2, p.n + 1):
        for subset in itertools.combinations(range(1, p.n + 1), size):
            total = sum((p.mm[pair] for pair in itertools.combinations(subset, 2)), Fraction(0))
            if not total > -size + 1:
                violations.append((subset, total, -size + 1))
    return violations


def check_smallness(p: MonodromyParams) -> None:
    """
    Raises:
        SmallnessError: naming the first failing subset
    """
    violations = smallness_violations(p)
    if violations:
        raise SmallnessError(*violations[0])
