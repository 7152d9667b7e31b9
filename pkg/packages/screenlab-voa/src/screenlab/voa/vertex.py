"""
Vertex operators, modes and the residue operator of V_Λ.

    Y(a)b = Σ_k ⟨a⁽¹⁾, b⁽¹⁾⟩ · b⁽²⁾ · (z^k/k!) ∂^k a⁽²⁾

For basis vectors the pairing is a single power z^{m₀}, so every split of
the two coproducts contributes the exponents m₀ + k, k ≥ 0, with the output
degree growing by one per step in k. A finite degree truncation therefore
cuts the z-series too.
"""
import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from screenlab.core import NonConvergent, cycle_factor, format_rational, is_integer
from screenlab.monodromy import res
from .element import Coefficient, DiffMonomial, TermKey, VoaElement, accumulate, min_truncation
from .hopf import pairing_coefficient
from .laurent import Window, check_window
from .lattice import Lattice, LatticePoint

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION = 6


@lru_cache(maxsize=65536)
def residue(m: Fraction) -> Coefficient:
    """res(z^m) at ħ = 1, exact for integral m."""
    if is_integer(m):
        return Fraction(int(m == -1))
    return res(m)


@lru_cache(maxsize=65536)
def translated(lattice: Lattice, u: DiffMonomial, alpha: LatticePoint, k: int) -> VoaElement:
    """(1/k!)∂^k(u e^{φ_α}), exact."""
    if k == 0:
        return VoaElement.monomial(lattice, u, alpha)
    return translated(lattice, u, alpha, k - 1).derivative().scale(Fraction(1, k))


@dataclass(frozen=True)
class _Contribution:
    """One split pair: weight·z^{m0}·b⁽²⁾·(z^k/k!)∂^k a⁽²⁾ summed over k."""
    m0: Fraction
    weight: Coefficient
    kept: TermKey
    translated: TermKey

    @property
    def base_degree(self) -> int:
        return self.kept[0].degree + self.translated[0].degree


def _contributions(a: VoaElement, b: VoaElement) -> Iterator[_Contribution]:
    lattice = a.lattice
    for (ua, alpha), ca in a:
        for (ub, beta), cb in b:
            inner = lattice.inner(alpha, beta)
            for ua1, ua0, ma in ua.splits():
                for ub1, ub0, mb in ub.splits():
                    value = pairing_coefficient(lattice, ua1, alpha, ub1, beta)
                    if value:
                        yield _Contribution(
                            inner - ua1.degree - ub1.degree,
                            ca * cb * ma * mb * value,
                            (ub0, beta),
                            (ua0, alpha),
                        )


def _term(lattice: Lattice, part: _Contribution, k: int, truncation: int | None) -> VoaElement:
    kept = VoaElement(lattice, {part.kept: 1}, truncation)
    return kept * translated(lattice, *part.translated, k)


@dataclass(frozen=True)
class VertexExpansion:
    """Y(a)b as exponent ↦ coefficient in V_Λ, valid up to degree truncation."""
    lattice: Lattice
    modes: dict[Fraction, VoaElement] = field(default_factory=dict)
    truncation: int | None = None

    def coefficient(self, m) -> VoaElement:
        return self.modes.get(Fraction(m), VoaElement.zero(self.lattice, self.truncation))

    def exponents(self) -> list[Fraction]:
        return sorted(self.modes)

    def __str__(self) -> str:
        return " + ".join(f"z^{format_rational(m)}·[{self.modes[m]}]" for m in self.exponents()) or "0"


def vertex_op(
    a: VoaElement,
    b: VoaElement,
    truncation: int = DEFAULT_TRUNCATION,
    window: Window | None = None,
) -> VertexExpansion:
    """
    Y(a)b up to ℕ₀-degree truncation.

    Exponents above the window's upper end are dropped like the degree tail;
    an exponent below its lower end cannot be dropped.

    Raises:
        NonConvergent: truncation is None
        WindowOverflow: an exponent below the window
    """
    if truncation is None:
        raise NonConvergent("Y(a)b is an infinite series in z; pass a finite truncation.")
    truncation = min_truncation(truncation, a.truncation, b.truncation)
    lattice = a.lattice
    low, high = window or (None, None)
    modes: dict[Fraction, VoaElement] = {}
    for part in _contributions(a, b):
        for k in range(truncation - part.base_degree + 1):
            m = part.m0 + k
            if high is not None and m > high:
                break
            check_window(m, (low, None), "vertex operator")
            term = _term(lattice, part, k, truncation).scale(part.weight)
            modes[m] = modes[m] + term if m in modes else term
    return VertexExpansion(lattice, {m: v for m, v in modes.items() if not v.is_zero()}, truncation)


def mode_op(a: VoaElement, m, b: VoaElement) -> VoaElement:
    """The exact z^m coefficient of Y(a)b; only finitely many splits reach a given m."""
    m = Fraction(m)
    lattice = a.lattice
    result = VoaElement.zero(lattice, min_truncation(a.truncation, b.truncation))
    for part in _contributions(a, b):
        k = m - part.m0
        if is_integer(k) and k >= 0:
            result = result + _term(lattice, part, int(k), None).scale(part.weight)
    return result


def res_y(a: VoaElement, b: VoaElement, truncation: int | None = DEFAULT_TRUNCATION) -> VoaElement:
    """
    ResY(a)b = Σ_m res(z^m)·[z^m]Y(a)b.

    Splits with integral exponents only see the z^{−1} mode and are exact
    without truncation; fractional exponents give an infinite series cut at
    the truncation degree.

    Raises:
        NonConvergent: a fractional exponent occurs and truncation is None
    """
    truncation = min_truncation(truncation, a.truncation, b.truncation)
    lattice = a.lattice
    terms: dict[TermKey, Coefficient] = {}

    def add(part: _Contribution, k: int, factor: Coefficient) -> None:
        for key, c in _term(lattice, part, k, truncation):
            accumulate(terms, key, factor * part.weight * c)

    for part in _contributions(a, b):
        if is_integer(part.m0):
            k = -1 - int(part.m0)
            if k >= 0 and (truncation is None or part.base_degree + k <= truncation):
                add(part, k, Fraction(1))
            continue
        if truncation is None:
            raise NonConvergent(
                f"ResY meets the fractional exponent {format_rational(part.m0)}; the tail is infinite without a truncation."
            )
        for k in range(truncation - part.base_degree + 1):
            add(part, k, residue(part.m0 + k))
    logger.debug(f"ResY: {len(terms)} terms at truncation {truncation}")
    return VoaElement(lattice, terms, truncation)


def translation_defect(alpha: LatticePoint, v: VoaElement, truncation: int = DEFAULT_TRUNCATION) -> VoaElement:
    """
    (∂ζ_α − ζ_α∂)v = Σ_m (e^{2πim} − 1)/(2πi)·[z^m]Y(e^{φ_α})v.

    Vanishes on V_β with (α,β) ∈ ℤ.
    """
    lattice = v.lattice
    truncation = min_truncation(truncation, v.truncation)
    terms: dict[TermKey, Coefficient] = {}
    for part in _contributions(VoaElement.exponential(lattice, alpha), v):
        if is_integer(part.m0):
            continue
        factor = cycle_factor(part.m0) * part.weight
        for k in range(truncation - part.base_degree + 1):
            for key, c in _term(lattice, part, k, truncation):
                accumulate(terms, key, factor * c)
    return VoaElement(lattice, terms, truncation)
