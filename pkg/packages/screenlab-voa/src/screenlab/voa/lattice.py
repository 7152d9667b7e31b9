import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from screenlab.core import PreconditionError, common_denominator, format_rational, is_integer, parse_rational

ROOT_SEARCH_RADIUS = 2


@dataclass(frozen=True, order=True)
class LatticePoint:
    """Coordinates in the fixed basis e_1..e_rank; rational when a weight is rescaled."""
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(parse_rational(x) for x in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(is_integer(x) for x in self.coords)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        self._same_rank(other)
        return LatticePoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return self + (-other)

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(tuple(-a for a in self.coords))

    def __mul__(self, c) -> "LatticePoint":
        c = parse_rational(c)
        return LatticePoint(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def _same_rank(self, other: "LatticePoint") -> None:
        if other.rank != self.rank:
            raise PreconditionError(f"Lattice points of ranks {self.rank} and {other.rank} do not combine.")

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(x) for x in self.coords) + ")"

    def to_json(self) -> list:
        return [int(x) if is_integer(x) else format_rational(x) for x in self.coords]

    @classmethod
    def from_json(cls, data: list) -> "LatticePoint":
        return cls(tuple(parse_rational(x) for x in data))

    @classmethod
    def of(cls, *coords) -> "LatticePoint":
        return cls(tuple(coords))

    @classmethod
    def zero(cls, rank: int) -> "LatticePoint":
        return cls((Fraction(0),) * rank)

    @classmethod
    def basis(cls, rank: int, i: int) -> "LatticePoint":
        """e_i, 0-based."""
        return cls(tuple(Fraction(int(j == i)) for j in range(rank)))


@dataclass(frozen=True)
class Lattice:
    """
    Λ with the rational inner product (e_i, e_j) = gram[i][j].

    All inner products are exact; N is the common denominator of the Gram
    entries, so pairing exponents of lattice points lie in (1/N)ℤ.
    """
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(parse_rational(x) for x in row) for row in self.gram)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise PreconditionError(f"Gram matrix must be square with rank >= 1, got {len(rows)} rows.")
        for i, j in itertools.combinations(range(len(rows)), 2):
            if rows[i][j] != rows[j][i]:
                raise PreconditionError(f"Gram matrix is not symmetric at ({i}, {j}): {rows[i][j]} != {rows[j][i]}.")
        object.__setattr__(self, "gram", rows)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def denominator(self) -> int:
        return common_denominator(x for row in self.gram for x in row)

    def point(self, *coords) -> LatticePoint:
        if len(coords) != self.rank:
            raise PreconditionError(f"Expected {self.rank} coordinates, got {len(coords)}.")
        return LatticePoint(tuple(coords))

    def basis(self, i: int) -> LatticePoint:
        return LatticePoint.basis(self.rank, i)

    def zero(self) -> LatticePoint:
        return LatticePoint.zero(self.rank)

    def inner_basis(self, i: int, x: LatticePoint) -> Fraction:
        """(e_i, x)"""
        return sum((g * c for g, c in zip(self.gram[i], x.coords)), Fraction(0))

    def inner(self, x: LatticePoint, y: LatticePoint) -> Fraction:
        if x.rank != self.rank or y.rank != self.rank:
            raise PreconditionError(f"Points of ranks {x.rank}, {y.rank} on a rank {self.rank} lattice.")
        return sum((a * self.inner_basis(i, y) for i, a in enumerate(x.coords)), Fraction(0))

    def norm(self, x: LatticePoint) -> Fraction:
        return self.inner(x, x)

    def is_integral(self) -> bool:
        return self.denominator == 1

    def roots(self) -> list[LatticePoint]:
        """
        Integral points of norm 2, sorted.

        Raises:
            PreconditionError: the Gram matrix is not integral
        """
        if not self.is_integral():
            raise PreconditionError(f"Roots need an integral lattice, Gram denominator is {self.denominator}.")
        span = range(-ROOT_SEARCH_RADIUS, ROOT_SEARCH_RADIUS + 1)
        candidates = (LatticePoint(tuple(Fraction(c) for c in coords)) for coords in itertools.product(span, repeat=self.rank))
        return sorted(x for x in candidates if self.norm(x) == 2)

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [[format_rational(x) for x in row] for row in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> "Lattice":
        lattice = cls(tuple(tuple(parse_rational(x) for x in row) for row in data["gram"]))
        if lattice.rank != int(data["rank"]):
            raise PreconditionError(f"Lattice declares rank {data['rank']} but has {lattice.rank} rows.")
        return lattice

    @classmethod
    def load(cls, path: Path) -> "Lattice":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))

    @classmethod
    def rank_one(cls, norm) -> "Lattice":
        return cls(((parse_rational(norm),),))

    @classmethod
    def sl2(cls) -> "Lattice":
        return cls.rank_one(2)

    @classmethod
    def sl3(cls) -> "Lattice":
        return cls(((Fraction(2), Fraction(-1)), (Fraction(-1), Fraction(2))))
