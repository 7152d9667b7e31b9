"""
Elements of V_Λ = ℂ[Λ] ⊗ U(H ⊗ Λ).

A basis vector is a differential monomial u in the generators ∂^kφ_{e_i}
(k ≥ 1) times a pure exponential e^{φ_β}. The ℕ₀-degree of ∂^kφ is k, so ∂
raises degree by one and P_{α,k} is homogeneous of degree k.

Coefficients stay ``Fraction`` as long as every operation on them is
rational; the first transcendental factor turns them into complex doubles.
"""
import itertools
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from screenlab.core import PreconditionError, format_rational
from .lattice import Lattice, LatticePoint

type Coefficient = Fraction | complex
type Generator = tuple[int, int]


def as_coefficient(c) -> Coefficient:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return complex(c)


def accumulate(acc: dict, key, value) -> None:
    acc[key] = acc.get(key, 0) + value


def min_truncation(*truncations: int | None) -> int | None:
    finite = [t for t in truncations if t is not None]
    return min(finite) if finite else None


@dataclass(frozen=True, order=True)
class DiffMonomial:
    """∏ (∂^k φ_{e_i})^{mult}, stored as sorted ((i, k), mult) pairs."""
    powers: tuple[tuple[Generator, int], ...] = ()

    def __post_init__(self):
        merged: dict[Generator, int] = {}
        for (i, k), mult in self.powers:
            if k < 1 or i < 0 or mult < 0:
                raise PreconditionError(f"Invalid generator ∂^{k}φ_{i} with multiplicity {mult}.")
            if mult:
                merged[(int(i), int(k))] = merged.get((int(i), int(k)), 0) + int(mult)
        object.__setattr__(self, "powers", tuple(sorted(merged.items())))

    @property
    def degree(self) -> int:
        return sum(k * mult for (_, k), mult in self.powers)

    def is_one(self) -> bool:
        return not self.powers

    def factors(self) -> tuple[Generator, ...]:
        """The generators with repetition, sorted."""
        return tuple(g for g, mult in self.powers for _ in range(mult))

    def __mul__(self, other: "DiffMonomial") -> "DiffMonomial":
        return DiffMonomial(self.powers + other.powers)

    def derivative(self) -> list[tuple[int, "DiffMonomial"]]:
        """∂u by the Leibniz rule, as (multiplicity, monomial) pairs."""
        result = []
        for (i, k), mult in self.powers:
            rest = tuple(((g, m - 1) if g == (i, k) else (g, m)) for g, m in self.powers)
            result.append((mult, DiffMonomial(rest + (((i, k + 1), 1),))))
        return result

    def splits(self) -> list[tuple["DiffMonomial", "DiffMonomial", int]]:
        """Δu = Σ c·u₁ ⊗ u₀ over sub-multisets u₁, with binomial multiplicities c."""
        return _splits(self.powers)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return " ".join(f"∂{k}φ{i}" + (f"^{mult}" if mult > 1 else "") for (i, k), mult in self.powers)

    def to_json(self) -> list[list[int]]:
        return [[i, k, mult] for (i, k), mult in self.powers]

    @classmethod
    def from_json(cls, data: Iterable) -> "DiffMonomial":
        return cls(tuple(((int(i), int(k)), int(mult)) for i, k, mult in data))

    @classmethod
    def one(cls) -> "DiffMonomial":
        return cls(())

    @classmethod
    def generator(cls, i: int, k: int = 1, mult: int = 1) -> "DiffMonomial":
        return cls((((i, k), mult),))

    @classmethod
    def from_factors(cls, factors: Iterable[Generator]) -> "DiffMonomial":
        return cls(tuple((g, 1) for g in factors))


@lru_cache(maxsize=65536)
def _splits(powers: tuple[tuple[Generator, int], ...]) -> list[tuple[DiffMonomial, DiffMonomial, int]]:
    result = []
    for choice in itertools.product(*(range(mult + 1) for _, mult in powers)):
        left = DiffMonomial(tuple((g, a) for (g, _), a in zip(powers, choice)))
        right = DiffMonomial(tuple((g, mult - a) for (g, mult), a in zip(powers, choice)))
        c = math.prod(math.comb(mult, a) for (_, mult), a in zip(powers, choice))
        result.append((left, right, c))
    return result


type TermKey = tuple[DiffMonomial, LatticePoint]


@dataclass(frozen=True)
class VoaElement:
    """
    Σ c·u·e^{φ_β}, keyed by (u, β).

    Terms above the truncation degree are dropped on construction; a result
    with truncation d is only meaningful in degrees ≤ d.
    """
    lattice: Lattice
    terms: dict[TermKey, Coefficient] = field(default_factory=dict)
    truncation: int | None = None

    def __post_init__(self):
        if self.truncation is not None and self.truncation < 0:
            raise PreconditionError(f"Truncation must be >= 0, got {self.truncation}.")
        terms = {}
        for (u, beta), c in self.terms.items():
            if beta.rank != self.lattice.rank:
                raise PreconditionError(f"Grade {beta} does not live on a rank {self.lattice.rank} lattice.")
            if self.truncation is not None and u.degree > self.truncation:
                continue
            c = as_coefficient(c)
            if c != 0:
                terms[(u, beta)] = c
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[TermKey, Coefficient]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, u: DiffMonomial, beta: LatticePoint) -> Coefficient:
        return self.terms.get((u, beta), Fraction(0))

    @property
    def degree(self) -> int:
        """Largest degree present, −1 for zero."""
        return max((u.degree for u, _ in self.terms), default=-1)

    def grades(self) -> set[LatticePoint]:
        return {beta for _, beta in self.terms}

    def component(self, beta: LatticePoint) -> "VoaElement":
        """The V_β part."""
        return self._with({key: c for key, c in self.terms.items() if key[1] == beta})

    def _with(self, terms: dict, truncation: int | None = ...) -> "VoaElement":
        return VoaElement(self.lattice, terms, self.truncation if truncation is ... else truncation)

    def _check_lattice(self, other: "VoaElement") -> None:
        if other.lattice != self.lattice:
            raise PreconditionError("Elements live on different lattices.")

    def __add__(self, other: "VoaElement") -> "VoaElement":
        self._check_lattice(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(terms, key, c)
        return self._with(terms, min_truncation(self.truncation, other.truncation))

    def __neg__(self) -> "VoaElement":
        return self.scale(-1)

    def __sub__(self, other: "VoaElement") -> "VoaElement":
        return self + (-other)

    def scale(self, c) -> "VoaElement":
        c = as_coefficient(c)
        return self._with({key: c * v for key, v in self.terms.items()})

    def __mul__(self, other) -> "VoaElement":
        if not isinstance(other, VoaElement):
            return self.scale(other)
        self._check_lattice(other)
        truncation = min_truncation(self.truncation, other.truncation)
        terms: dict[TermKey, Coefficient] = {}
        for (u, a), c in self.terms.items():
            for (v, b), d in other.terms.items():
                w = u * v
                if truncation is None or w.degree <= truncation:
                    accumulate(terms, (w, a + b), c * d)
        return self._with(terms, truncation)

    def __rmul__(self, c) -> "VoaElement":
        return self.scale(c)

    def derivative(self, times: int = 1) -> "VoaElement":
        """∂ as the derivation with ∂(∂^kφ) = ∂^{k+1}φ and ∂e^{φ_β} = ∂φ_β e^{φ_β}."""
        current = self
        for _ in range(times):
            terms: dict[TermKey, Coefficient] = {}
            for (u, beta), c in current.terms.items():
                for mult, du in u.derivative():
                    accumulate(terms, (du, beta), mult * c)
                for i, b in enumerate(beta.coords):
                    if b:
                        accumulate(terms, (u * DiffMonomial.generator(i), beta), b * c)
            current = current._with(terms)
        return current

    def truncate(self, degree: int) -> "VoaElement":
        return self._with(dict(self.terms), min_truncation(self.truncation, degree))

    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.terms.values())

    def max_abs_coeff(self) -> float:
        return float(max((abs(c) for c in self.terms.values()), default=0.0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (u, beta), c in sorted(self.terms.items()):
            value = format_rational(c) if isinstance(c, Fraction) else f"({c:.8g})"
            parts.append(f"{value}·{u}·e^{beta}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        result = []
        for (u, beta), c in sorted(self.terms.items()):
            entry = {
                "monomial": u.to_json(),
                "lattice": beta.to_json(),
                "coeff": {"re": float(complex(c).real), "im": float(complex(c).imag)},
            }
            if isinstance(c, Fraction):
                entry["exact"] = format_rational(c)
            result.append(entry)
        return result

    @classmethod
    def from_json(cls, lattice: Lattice, data: list[dict], truncation: int | None = None) -> "VoaElement":
        terms: dict[TermKey, Coefficient] = {}
        for entry in data:
            if "exact" in entry:
                c = Fraction(entry["exact"])
            else:
                c = complex(entry["coeff"]["re"], entry["coeff"].get("im", 0.0))
            accumulate(terms, (DiffMonomial.from_json(entry["monomial"]), LatticePoint.from_json(entry["lattice"])), c)
        return cls(lattice, terms, truncation)

    @classmethod
    def zero(cls, lattice: Lattice, truncation: int | None = None) -> "VoaElement":
        return cls(lattice, {}, truncation)

    @classmethod
    def monomial(cls, lattice: Lattice, u: DiffMonomial, beta: LatticePoint, c=1) -> "VoaElement":
        return cls(lattice, {(u, beta): c})

    @classmethod
    def exponential(cls, lattice: Lattice, beta: LatticePoint, c=1) -> "VoaElement":
        """c·e^{φ_β}"""
        return cls.monomial(lattice, DiffMonomial.one(), beta, c)

    @classmethod
    def vacuum(cls, lattice: Lattice) -> "VoaElement":
        return cls.exponential(lattice, lattice.zero())

    @classmethod
    def phi(cls, lattice: Lattice, alpha: LatticePoint, k: int = 1) -> "VoaElement":
        """∂^kφ_α = Σ α_i ∂^kφ_{e_i}"""
        zero = lattice.zero()
        return cls(lattice, {(DiffMonomial.generator(i, k), zero): a for i, a in enumerate(alpha.coords) if a})
