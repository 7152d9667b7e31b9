import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from screenlab.core import PreconditionError, parse_rational


@dataclass(frozen=True)
class SelbergParams:
    """
    Exponents of Sel(m; m̄; m_ij): z_i^{m_i}, (1−z_i)^{m̄_i} and (z_i−z_j)^{m_ij}.

    Indices are 1-based. n = 0 is the empty integral with value 1.
    """
    m: tuple[Fraction, ...]
    mbar: tuple[Fraction, ...] = ()
    mm: dict[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        m = tuple(parse_rational(x) for x in self.m)
        n = len(m)
        mbar = tuple(parse_rational(x) for x in self.mbar) if self.mbar else (Fraction(0),) * n
        if len(mbar) != n:
            raise PreconditionError(f"Expected {n} values m̄_i, got {len(mbar)}.")
        expected = set(itertools.combinations(range(1, n + 1), 2))
        if set(self.mm) != expected:
            raise PreconditionError(f"mm must define exactly the pairs i<j of 1..{n}, got {sorted(self.mm)}.")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mbar", mbar)
        object.__setattr__(self, "mm", {pair: parse_rational(self.mm[pair]) for pair in sorted(expected)})

    def __hash__(self):
        return hash((self.m, self.mbar, tuple(self.mm.items())))

    @property
    def n(self) -> int:
        return len(self.m)

    def pair(self, i: int, j: int) -> Fraction:
        return self.mm[(i, j) if i < j else (j, i)]

    def has_bar(self) -> bool:
        return any(self.mbar)

    @classmethod
    def from_lists(cls, m, mbar, mm_upper) -> "SelbergParams":
        """mm_upper lists m_12, m_13, ..., m_23, ... row-major."""
        pairs = list(itertools.combinations(range(1, len(m) + 1), 2))
        if len(mm_upper) != len(pairs):
            raise PreconditionError(f"Expected {len(pairs)} values m_ij for n={len(m)}, got {len(mm_upper)}.")
        return cls(tuple(m), tuple(mbar), dict(zip(pairs, mm_upper)))

    @classmethod
    def uniform(cls, n: int, m_i, mbar_i, m_ij) -> "SelbergParams":
        return cls.from_lists([m_i] * n, [mbar_i] * n, [m_ij] * (n * (n - 1) // 2))

    def cube_exponents(self) -> tuple[Fraction, ...]:
        """
        Exponent of u_l after z_j = u_1···u_j, Jacobian included:
        Σ_{i≥l} m_i + Σ_{l≤i<j} m_ij + (n − l).
        """
        return tuple(
            sum(self.m[l - 1:], Fraction(0))
            + sum((v for (i, _), v in self.mm.items() if i >= l), Fraction(0))
            + (self.n - l)
            for l in range(1, self.n + 1)
        )
