from functools import lru_cache

from .element import Coefficient, DiffMonomial, TermKey, VoaElement, accumulate, min_truncation
from .lattice import Lattice, LatticePoint
from .vertex import DEFAULT_TRUNCATION, res_y


def yer(alpha: LatticePoint, v: VoaElement) -> VoaElement:
    """Scalar charge: u e^{φ_β} ↦ (α,β)·u e^{φ_β}."""
    lattice = v.lattice
    return VoaElement(lattice, {(u, beta): lattice.inner(alpha, beta) * c for (u, beta), c in v}, v.truncation)


@lru_cache(maxsize=131072)
def _zemlja_basis(lattice: Lattice, alpha: LatticePoint, u: DiffMonomial, beta: LatticePoint, truncation: int | None) -> VoaElement:
    return res_y(VoaElement.exponential(lattice, alpha), VoaElement.monomial(lattice, u, beta), truncation)


def zemlja(alpha: LatticePoint, v: VoaElement, truncation: int | None = DEFAULT_TRUNCATION) -> VoaElement:
    """
    Screening ζ_α = ResY(e^{φ_α}), mapping V_β to V_{α+β}.

    On e^{φ_β} this is 0 for (α,β) ∈ ℕ₀, P_{α,k}e^{φ_{α+β}} with k = −(α,β)−1
    for (α,β) ∈ −ℕ, and the degree-truncated series Σ_k res(z^{(α,β)+k}) P_{α,k}
    e^{φ_{α+β}} otherwise. truncation=None is exact and only allowed when every
    exponent met is integral.

    Raises:
        NonConvergent: fractional exponents without a truncation
    """
    truncation = min_truncation(truncation, v.truncation)
    terms: dict[TermKey, Coefficient] = {}
    for (u, beta), c in v:
        for key, d in _zemlja_basis(v.lattice, alpha, u, beta, truncation):
            accumulate(terms, key, c * d)
    return VoaElement(v.lattice, terms, truncation)
