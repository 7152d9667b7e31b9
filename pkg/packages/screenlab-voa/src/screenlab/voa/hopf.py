"""
Hopf structure of V_Λ and its pairing with coefficients in fractional Laurent polynomials.

e^{φ_α} is grouplike and every ∂^kφ is primitive. The pairing is fixed by

    ⟨e^{φ_α}, e^{φ_β}⟩ = z^{(α,β)},     ⟨e^{φ_α}, ∂φ_β⟩ = −(α,β) z^{−1},
    ⟨∂φ_α, e^{φ_β}⟩ = (α,β) z^{−1},     ⟨∂φ_α, ∂φ_β⟩ = (α,β) z^{−2},

together with ⟨a, bc⟩ = ⟨a⁽¹⁾, b⟩⟨a⁽²⁾, c⟩, ⟨ab, c⟩ = ⟨a, c⁽¹⁾⟩⟨b, c⁽²⁾⟩,
⟨a, ∂b⟩ = −d/dz⟨a, b⟩ and ⟨∂a, b⟩ = d/dz⟨a, b⟩. On basis vectors these
rules leave a sum over partial matchings of the two monomials' factors, and
the value is a single power z^{(α,β) − |u| − |v|}.
"""
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from screenlab.core import PreconditionError
from .element import Coefficient, DiffMonomial, Generator, TermKey, VoaElement, accumulate, as_coefficient
from .laurent import FracLaurent, Window, check_window
from .lattice import Lattice, LatticePoint


@lru_cache(maxsize=4096)
def diff_poly(lattice: Lattice, alpha: LatticePoint, k: int) -> VoaElement:
    """
    P_{α,k}, defined by (1/k!)∂^k e^{φ_α} = P_{α,k} e^{φ_α}.

    Built by (k+1)P_{α,k+1} = ∂P_{α,k} + P_{α,k}∂φ_α, i.e. by differentiating
    the exponential; coefficients are exact.
    """
    if k < 0:
        raise PreconditionError(f"P_{{α,k}} needs k >= 0, got {k}.")
    derived = VoaElement.exponential(lattice, alpha).derivative(k).scale(Fraction(1, math.factorial(k)))
    zero = lattice.zero()
    return VoaElement(lattice, {(u, zero): c for (u, _), c in derived})


@dataclass(frozen=True)
class Tensor:
    """Finite Σ c·(u₁e^{β₁}) ⊗ ... ⊗ (u_r e^{β_r}), keyed by the tuple of basis keys."""
    lattice: Lattice
    terms: dict[tuple[TermKey, ...], Coefficient] = field(default_factory=dict)

    def __post_init__(self):
        terms = {}
        for key, c in self.terms.items():
            c = as_coefficient(c)
            if c != 0:
                terms[tuple(key)] = c
        object.__setattr__(self, "terms", terms)

    @property
    def legs(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Tensor") -> "Tensor":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(terms, key, c)
        return Tensor(self.lattice, terms)

    def __neg__(self) -> "Tensor":
        return self.scale(-1)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, c) -> "Tensor":
        c = as_coefficient(c)
        return Tensor(self.lattice, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, other: "Tensor") -> "Tensor":
        """Leg-wise product in V_Λ^{⊗r}."""
        terms: dict[tuple[TermKey, ...], Coefficient] = {}
        for left, c in self.terms.items():
            for right, d in other.terms.items():
                key = tuple((u * v, a + b) for (u, a), (v, b) in zip(left, right))
                accumulate(terms, key, c * d)
        return Tensor(self.lattice, terms)

    def apply(self, leg: int, fn: Callable[[VoaElement], "Tensor"]) -> "Tensor":
        """Replace leg by the tensor fn(leg), e.g. (Δ ⊗ id) for leg 0 and fn = coproduct."""
        terms: dict[tuple[TermKey, ...], Coefficient] = {}
        for key, c in self.terms.items():
            image = fn(VoaElement(self.lattice, {key[leg]: 1}))
            for inner, d in image.terms.items():
                accumulate(terms, key[:leg] + inner + key[leg + 1:], c * d)
        return Tensor(self.lattice, terms)

    @classmethod
    def of(cls, *elements: VoaElement) -> "Tensor":
        lattice = elements[0].lattice
        terms: dict[tuple[TermKey, ...], Coefficient] = {(): Fraction(1)}
        for element in elements:
            terms = {
                key + (inner,): c * d
                for key, c in terms.items()
                for inner, d in element.terms.items()
            }
        return cls(lattice, terms)


def coproduct(v: VoaElement) -> Tensor:
    """Δ extended multiplicatively from Δe^{φ_β} = e^{φ_β} ⊗ e^{φ_β} and primitive ∂^kφ."""
    terms: dict[tuple[TermKey, ...], Coefficient] = {}
    for (u, beta), c in v:
        for left, right, mult in u.splits():
            accumulate(terms, ((left, beta), (right, beta)), mult * c)
    return Tensor(v.lattice, terms)


def _pair_generators(lattice: Lattice, x: Generator, y: Generator) -> Fraction:
    """⟨∂^kφ_i, ∂^lφ_j⟩ = (−1)^{k−1}(k+l−1)!(e_i,e_j) z^{−k−l}"""
    (i, k), (j, l) = x, y
    return (-1) ** (k - 1) * math.factorial(k + l - 1) * lattice.gram[i][j]


def _pair_with_exponential(lattice: Lattice, x: Generator, beta: LatticePoint) -> Fraction:
    """⟨∂^kφ_i, e^{φ_β}⟩ = (−1)^{k−1}(k−1)!(e_i,β) z^{−k}"""
    i, k = x
    return (-1) ** (k - 1) * math.factorial(k - 1) * lattice.inner_basis(i, beta)


def _exponential_with(lattice: Lattice, alpha: LatticePoint, y: Generator) -> Fraction:
    """⟨e^{φ_α}, ∂^lφ_j⟩ = −(l−1)!(α,e_j) z^{−l}"""
    j, l = y
    return -math.factorial(l - 1) * lattice.inner_basis(j, alpha)


@lru_cache(maxsize=262144)
def _matchings(
    lattice: Lattice,
    xs: tuple[Generator, ...],
    ys: tuple[Generator, ...],
    alpha: LatticePoint,
    beta: LatticePoint,
) -> Fraction:
    if not xs:
        return math.prod((_exponential_with(lattice, alpha, y) for y in ys), start=Fraction(1))
    x, rest = xs[0], xs[1:]
    total = _pair_with_exponential(lattice, x, beta) * _matchings(lattice, rest, ys, alpha, beta)
    for position, y in enumerate(ys):
        if position and ys[position - 1] == y:
            continue
        count = ys.count(y)
        remaining = ys[:position] + ys[position + 1:]
        total += count * _pair_generators(lattice, x, y) * _matchings(lattice, rest, remaining, alpha, beta)
    return total


def pairing_coefficient(lattice: Lattice, u: DiffMonomial, alpha: LatticePoint, v: DiffMonomial, beta: LatticePoint) -> Fraction:
    """c with ⟨u e^{φ_α}, v e^{φ_β}⟩ = c·z^{(α,β) − |u| − |v|}."""
    return _matchings(lattice, u.factors(), v.factors(), alpha, beta)


def pairing(a: VoaElement, b: VoaElement, window: Window | None = None) -> FracLaurent:
    """
    ⟨a, b⟩ with exact rational exponents.

    Raises:
        WindowOverflow: an exponent of the result leaves window
    """
    lattice = a.lattice
    coeffs: dict[Fraction, Coefficient] = {}
    for (u, alpha), c in a:
        for (v, beta), d in b:
            value = pairing_coefficient(lattice, u, alpha, v, beta)
            if value:
                m = lattice.inner(alpha, beta) - u.degree - v.degree
                check_window(m, window, "pairing")
                accumulate(coeffs, m, c * d * value)
    return FracLaurent(coeffs, window or (None, None))
