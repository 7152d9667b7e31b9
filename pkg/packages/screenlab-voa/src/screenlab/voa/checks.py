"""
Pointwise checks of screening relations on V_Λ.

Nichols relations are applied to pure exponentials through either screening
route; the trivial-level relations are checked exactly on a basis of V_Λ.
"""
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from screenlab.core import PreconditionError, format_rational, ordered_map
from screenlab.nichols import WordCombination
from .charges import yer, zemlja
from .element import DiffMonomial, Generator, VoaElement
from .lattice import Lattice, LatticePoint
from .screening import screening_product_direct, screening_product_formula

logger = logging.getLogger(__name__)

type Route = Literal["formula", "direct"]

NICHOLS_TRUNCATION = 4
NICHOLS_TOL = 1e-10


def apply_relation(
    relation: WordCombination,
    lattice: Lattice,
    alphas: Sequence[LatticePoint],
    lam: LatticePoint,
    truncation: int = NICHOLS_TRUNCATION,
    route: Route = "formula",
    tol: float = NICHOLS_TOL,
    shell_cap: int | None = None,
    jobs: int = 1,
) -> VoaElement:
    """
    Σ_f c_f ζ_{α_{f(1)}}···ζ_{α_{f(n)}} e^{φ_λ} for the relation Σ_f c_f x_{f(1)}⊗...⊗x_{f(n)}.

    Colors are 0-based indices into alphas.
    """
    missing = relation.colors() - set(range(len(alphas)))
    if missing:
        raise PreconditionError(f"Colors {sorted(missing)} have no screening momentum among {len(alphas)}.")
    for color in sorted(relation.colors()):
        if lattice.norm(alphas[color]) > 1:
            logger.warning(
                f"Color {color}: |α|² = {format_rational(lattice.norm(alphas[color]))} > 1, smallness is not guaranteed."
            )
    v = VoaElement.exponential(lattice, lam)
    result = VoaElement.zero(lattice, truncation)
    for word, c in relation.terms.items():
        momenta = [alphas[color] for color in word]
        if route == "formula":
            product = screening_product_formula(momenta, v, truncation, tol=tol, shell_cap=shell_cap, jobs=jobs)
        elif route == "direct":
            product = screening_product_direct(momenta, v, truncation)
        else:
            raise PreconditionError(f"Unknown screening route '{route}'.")
        result = result + product.scale(c)
    return result


def check_nichols_on_vector(
    relation: WordCombination,
    lattice: Lattice,
    alphas: Sequence[LatticePoint],
    lam: LatticePoint,
    truncation: int = NICHOLS_TRUNCATION,
    route: Route = "formula",
    tol: float = NICHOLS_TOL,
    shell_cap: int | None = None,
    jobs: int = 1,
) -> float:
    """Largest coefficient of the relation applied to e^{φ_λ}; ≈ 0 when it holds up to truncation."""
    residual = apply_relation(relation, lattice, alphas, lam, truncation, route, tol, shell_cap, jobs).max_abs_coeff()
    logger.info(f"Nichols check, degree {relation.degree} at λ={lam}: max |coefficient| {residual:.3e}")
    return residual


def triplet_w0(p: int) -> VoaElement:
    """ζ_β e^{−φ_β} on the rank-one lattice (β,β) = 2p, exactly P_{β,2p−1}."""
    if p < 1:
        raise PreconditionError(f"p must be >= 1, got {p}.")
    lattice = Lattice.rank_one(2 * p)
    beta = lattice.basis(0)
    return zemlja(beta, VoaElement.exponential(lattice, -beta), truncation=None)


@dataclass(frozen=True)
class WeylCheck:
    """ζ^n e^{φ_λ} on (α,α) = 2/p at (α,λ) = −(n−1)/p − 1."""
    p: int
    n: int
    weight: Fraction
    element: VoaElement
    pure_coefficient: complex
    residual: float

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "weight": format_rational(self.weight),
            "pure_coefficient": {"re": self.pure_coefficient.real, "im": self.pure_coefficient.imag},
            "residual": self.residual,
        }


def weyl_vanishing_check(
    p: int,
    n: int | None = None,
    truncation: int = NICHOLS_TRUNCATION,
    route: Route = "formula",
    tol: float = NICHOLS_TOL,
) -> WeylCheck:
    """
    n-fold short screening at the pole weight m = −(n−1)/p − 1, n = p − 1 by default.

    Only the pure exponential e^{φ_{λ+nα}} survives: its coefficient is
    F₋(m,...,m; 2/p) while every other coefficient vanishes.
    """
    if p < 2:
        raise PreconditionError(f"p must be >= 2, got {p}.")
    n = p - 1 if n is None else n
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}.")
    lattice = Lattice.rank_one(Fraction(2, p))
    alpha = lattice.basis(0)
    weight = -Fraction(n - 1, p) - 1
    lam = lattice.point(weight * p / 2)
    element = apply_relation(WordCombination.power(0, n), lattice, [alpha], lam, truncation, route, tol)
    target = lam + alpha * n
    pure = complex(element.coefficient(DiffMonomial.one(), target))
    rest = element - VoaElement.exponential(lattice, target, element.coefficient(DiffMonomial.one(), target))
    result = WeylCheck(p, n, weight, element, pure, rest.max_abs_coeff())
    logger.info(f"Weyl check p={p}, n={n}: pure coefficient {pure:.6g}, residual {result.residual:.3e}")
    return result


def _multisets(generators: list[Generator], start: int, budget: int) -> Iterator[tuple[Generator, ...]]:
    yield ()
    for index in range(start, len(generators)):
        generator = generators[index]
        if generator[1] <= budget:
            for rest in _multisets(generators, index, budget - generator[1]):
                yield (generator,) + rest


def basis_monomials(rank: int, degree: int) -> list[DiffMonomial]:
    """Every differential monomial in ∂^kφ_{e_i} of ℕ₀-degree ≤ degree."""
    generators = [(i, k) for k in range(1, degree + 1) for i in range(rank)]
    return sorted({DiffMonomial.from_factors(factors) for factors in _multisets(generators, 0, degree)})


@dataclass(frozen=True)
class RelationCheck:
    name: str
    alpha: LatticePoint
    beta: LatticePoint
    vectors: int
    residual: float

    def to_dict(self) -> dict:
        return {
            "relation": self.name,
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "vectors": self.vectors,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class TrivialLevelReport:
    lattice: Lattice
    truncation: int
    checks: list[RelationCheck] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        return max((check.residual for check in self.checks), default=0.0)

    def passed(self, tol: float = 0.0) -> bool:
        return self.max_residual <= tol

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice.to_json(),
            "truncation": self.truncation,
            "max_residual": self.max_residual,
            "checks": [check.to_dict() for check in self.checks],
        }


def _zeta(alpha: LatticePoint, v: VoaElement) -> VoaElement:
    return zemlja(alpha, v, truncation=None)


def _relation(lattice: Lattice, name: str, alpha: LatticePoint, beta: LatticePoint, v: VoaElement) -> VoaElement:
    """The defect of one trivial-level relation on v; zero when it holds."""
    if name == "charge":
        return yer(beta, _zeta(alpha, v)) - _zeta(alpha, yer(beta, v)) - _zeta(alpha, v).scale(lattice.inner(beta, alpha))
    forward = _zeta(alpha, _zeta(beta, v))
    backward = _zeta(beta, _zeta(alpha, v))
    match name:
        case "anticommutator":
            return forward + backward - _zeta(alpha + beta, v)
        case "commutator":
            return forward - backward - yer(alpha, v)
        case "q-commutator":
            sign = (-1) ** int(lattice.inner(alpha, beta))
            return forward - backward.scale(sign)
    raise PreconditionError(f"Unknown trivial-level relation '{name}'.")


def _relations(lattice: Lattice, roots: list[LatticePoint]) -> list[tuple[str, LatticePoint, LatticePoint]]:
    relations = []
    for index, alpha in enumerate(roots):
        for beta in roots[index + 1:]:
            inner = lattice.inner(alpha, beta)
            if inner == -1:
                relations.append(("anticommutator", alpha, beta))
            elif inner in (0, 1):
                relations.append(("q-commutator", alpha, beta))
            elif beta == -alpha:
                relations.append(("commutator", alpha, beta))
    for alpha in roots:
        for i in range(lattice.rank):
            relations.append(("charge", alpha, lattice.basis(i)))
    return relations


def trivial_level_relations(
    g: str | Lattice,
    truncation: int = NICHOLS_TRUNCATION,
    points: Sequence[LatticePoint] | None = None,
    jobs: int = 1,
) -> TrivialLevelReport:
    """
    Exact check of the trivial-level screening relations on u·e^{φ_β}, |u| ≤ truncation.

        [ζ_α, ζ_β]₊ = ζ_{α+β}      (α,β) = −1
        ζ_αζ_β = e^{πi(α,β)}ζ_βζ_α  (α,β) ∈ {0, 1}
        [ζ_α, ζ_{−α}] = yer_α
        [yer_λ, ζ_α] = (λ,α)ζ_α

    β runs over 0 and the roots unless points are given.
    """
    presets = {"sl2": Lattice.sl2, "sl3": Lattice.sl3}
    if isinstance(g, str):
        if g not in presets:
            raise PreconditionError(f"Unknown root lattice '{g}', expected one of {sorted(presets)}.")
        lattice = presets[g]()
    else:
        lattice = g
    roots = lattice.roots()
    if not roots:
        raise PreconditionError("The lattice has no roots of norm 2.")
    grades = list(points) if points is not None else [lattice.zero(), *roots]
    basis = [
        VoaElement.monomial(lattice, u, beta)
        for beta in grades
        for u in basis_monomials(lattice.rank, truncation)
    ]

    def run(relation: tuple[str, LatticePoint, LatticePoint]) -> RelationCheck:
        name, alpha, beta = relation
        residual = max(_relation(lattice, name, alpha, beta, v).max_abs_coeff() for v in basis)
        return RelationCheck(name, alpha, beta, len(basis), residual)

    checks = ordered_map(run, _relations(lattice, roots), jobs)
    report = TrivialLevelReport(lattice, truncation, checks)
    logger.info(
        f"Trivial level: {len(checks)} relations on {len(basis)} basis vectors, max residual {report.max_residual:.3e}"
    )
    return report
