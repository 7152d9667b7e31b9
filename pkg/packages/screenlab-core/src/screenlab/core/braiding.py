import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import PreconditionError
from .numeric import PhaseExponent, common_denominator, format_rational, parse_rational, phase_eval


@dataclass(frozen=True)
class BraidingMatrix:
    """
    Diagonal braiding q_ij = e^{πi m_ij} stored by the exponents m_ij mod 2.

    Rows and columns are indexed by colors 0..rank−1.
    """
    m: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(parse_rational(x) % 2 for x in row) for row in self.m)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise PreconditionError(f"Braiding matrix must be square with rank >= 1, got {len(rows)} rows.")
        object.__setattr__(self, "m", rows)

    @property
    def rank(self) -> int:
        return len(self.m)

    def phase(self, i: int, j: int) -> PhaseExponent:
        return PhaseExponent(self.m[i][j])

    def q(self, i: int, j: int) -> complex:
        return phase_eval(self.m[i][j])

    @property
    def denominator(self) -> int:
        return common_denominator(x for row in self.m for x in row)

    def integer_exponents(self) -> np.ndarray:
        """m_ij·N as integers mod 2N, N the common denominator."""
        n = self.denominator
        return np.array([[int(x * n) % (2 * n) for x in row] for row in self.m], dtype=np.int64)

    def relabeled(self, colors: tuple[int, ...]) -> "BraidingMatrix":
        """Matrix of the generators renamed by i ↦ colors[i]."""
        inverse = {c: i for i, c in enumerate(colors)}
        return BraidingMatrix(tuple(
            tuple(self.m[inverse[a]][inverse[b]] for b in range(self.rank)) for a in range(self.rank)
        ))

    @classmethod
    def rank_one(cls, m) -> "BraidingMatrix":
        return cls(((parse_rational(m),),))

    @classmethod
    def from_gram(cls, gram) -> "BraidingMatrix":
        """q_ij = e^{πi (α_i, α_j)}, the braiding of screenings with momenta α_i."""
        return cls(tuple(tuple(parse_rational(x) for x in row) for row in gram))

    @classmethod
    def a2(cls, t) -> "BraidingMatrix":
        """Quantum-group type A2 at q = e^{πi t}: q_ii = q², q_12 = q_21 = q⁻¹."""
        t = parse_rational(t)
        return cls(((2 * t, -t), (-t, 2 * t)))

    @classmethod
    def super_sl21_prime(cls, t) -> "BraidingMatrix":
        """sl(2|1) with both simple roots odd, q = e^{πi t}."""
        t = parse_rational(t)
        return cls(((Fraction(1), -t), (-t, Fraction(1))))

    @classmethod
    def super_sl21_double_prime(cls, t) -> "BraidingMatrix":
        """sl(2|1) with one odd and one even simple root, q = e^{πi t}."""
        t = parse_rational(t)
        return cls(((Fraction(1), -t), (-t, 2 * t)))

    @classmethod
    def from_json(cls, data: dict) -> "BraidingMatrix":
        rank = int(data["rank"])
        matrix = cls(tuple(tuple(parse_rational(x) for x in row) for row in data["m"]))
        if matrix.rank != rank:
            raise PreconditionError(f"Braiding matrix declares rank {rank} but has {matrix.rank} rows.")
        return matrix

    @classmethod
    def load(cls, path: Path) -> "BraidingMatrix":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    def to_json(self) -> dict:
        return {"rank": self.rank, "m": [[format_rational(x) for x in row] for row in self.m]}
