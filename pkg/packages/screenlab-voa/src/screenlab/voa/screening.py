"""
Products of screenings ζ_{α_1}···ζ_{α_n} v by two independent routes.

The direct route applies the screenings one after the other. Its states are
kept as u·∏P_{α_r,k_r}·e^{φ_β}, which ζ_γ maps by the coproduct
ΔP_{α,k} = Σ P_{α,a} ⊗ P_{α,k−a}, the character ⟨e^{φ_γ}, P_{α,a}⟩ =
(−1)^a C((γ,α), a) z^{−a} and the new factor P_{γ,j} from Y(e^{φ_γ}). Every
intermediate state is cut at a total degree, the final one at the requested
truncation.

The formula route reads the coefficient of ∏P_{α_i,k_i} e^{φ_{λ+Σα}} off the
monodromy number F₋((m_i + k_i, m_ij)), m_i = (α_i, λ), m_ij = (α_i, α_j).
"""
import logging
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache

from screenlab.core import NonConvergent, PreconditionError, is_integer, ordered_map
from screenlab.monodromy import MonodromyParams, compositions, f_minus
from .element import Coefficient, DiffMonomial, TermKey, VoaElement, accumulate, min_truncation
from .hopf import diff_poly, pairing_coefficient
from .lattice import Lattice, LatticePoint
from .vertex import DEFAULT_TRUNCATION, residue

logger = logging.getLogger(__name__)

DEFAULT_INTERMEDIATE_DEGREE = {2: 2000, 3: 120}
FALLBACK_INTERMEDIATE_DEGREE = 40

type PFactor = tuple[LatticePoint, int]
type StateKey = tuple[DiffMonomial, tuple[PFactor, ...], LatticePoint]


class _SignedBinomials:
    """(−1)^a C(x, a), exact for integral x; rows grow on demand."""

    def __init__(self):
        self._rows: dict[Fraction, list] = {}

    def __call__(self, x: Fraction, a: int) -> Coefficient:
        row = self._rows.get(x)
        if row is None:
            row = self._rows[x] = [Fraction(1) if is_integer(x) else 1.0]
        step = x if is_integer(x) else float(x)
        while len(row) <= a:
            j = len(row) - 1
            row.append(-row[-1] * (step - j) / (j + 1))
        return row[a]


_signed_binomial = _SignedBinomials()


def default_intermediate_degree(n: int) -> int:
    return DEFAULT_INTERMEDIATE_DEGREE.get(n, FALLBACK_INTERMEDIATE_DEGREE)


def _factor_splits(
    lattice: Lattice,
    gamma: LatticePoint,
    factors: tuple[PFactor, ...],
    budget: int | None,
) -> Iterator[tuple[tuple[PFactor, ...], Coefficient, int]]:
    """(remaining factors, ∏(−1)^a C((γ,α), a), Σa) over P_{α,k} ↦ P_{α,k−a} with remaining degree ≤ budget."""
    if not factors:
        yield (), Fraction(1), 0
        return
    (alpha, k), rest = factors[0], factors[1:]
    inner = lattice.inner(gamma, alpha)
    top = k if budget is None else min(k, budget)
    for b in range(top + 1):
        weight = _signed_binomial(inner, k - b)
        if not weight:
            continue
        for kept, rest_weight, lowered in _factor_splits(lattice, gamma, rest, None if budget is None else budget - b):
            head = ((alpha, b),) if b else ()
            yield head + kept, weight * rest_weight, lowered + k - b


def _residues(m0: Fraction, top: int | None) -> Iterator[tuple[int, Coefficient]]:
    """(j, res(z^{m0+j})) for 0 ≤ j ≤ top."""
    if is_integer(m0):
        j = -1 - int(m0)
        if j >= 0 and (top is None or j <= top):
            yield j, Fraction(1)
        return
    if top is None:
        raise NonConvergent(f"Screening meets the fractional exponent {m0}; pass a finite truncation.")
    for j in range(top + 1):
        yield j, residue(m0 + j)


def _screen(lattice: Lattice, gamma: LatticePoint, state: dict[StateKey, Coefficient], limit: int | None) -> dict[StateKey, Coefficient]:
    out: dict[StateKey, Coefficient] = {}
    one = DiffMonomial.one()
    for (u, factors, beta), c in state.items():
        inner = lattice.inner(gamma, beta)
        for u1, u0, mult in u.splits():
            chi = pairing_coefficient(lattice, one, gamma, u1, beta)
            if not chi:
                continue
            budget = None if limit is None else limit - u0.degree
            if budget is not None and budget < 0:
                continue
            for kept, weight, lowered in _factor_splits(lattice, gamma, factors, budget):
                rest = u0.degree + sum(k for _, k in kept)
                top = None if limit is None else limit - rest
                coefficient = c * mult * chi * weight
                for j, r in _residues(inner - u1.degree - lowered, top):
                    merged = tuple(sorted(kept + ((gamma, j),))) if j else kept
                    accumulate(out, (u0, merged, beta + gamma), coefficient * r)
    return {key: c for key, c in out.items() if c != 0}


@lru_cache(maxsize=16384)
def _p_product(lattice: Lattice, factors: tuple[PFactor, ...], truncation: int | None) -> VoaElement:
    product = VoaElement(lattice, {(DiffMonomial.one(), lattice.zero()): 1}, truncation)
    for alpha, k in factors:
        product = product * diff_poly(lattice, alpha, k)
    return product


def _expand(lattice: Lattice, state: dict[StateKey, Coefficient], truncation: int | None) -> VoaElement:
    terms: dict[TermKey, Coefficient] = {}
    for (u, factors, beta), c in state.items():
        for (v, _), d in _p_product(lattice, factors, truncation):
            w = u * v
            if truncation is None or w.degree <= truncation:
                accumulate(terms, (w, beta), c * d)
    return VoaElement(lattice, terms, truncation)


def screening_product_direct(
    alphas: Sequence[LatticePoint],
    v: VoaElement,
    truncation: int | None = DEFAULT_TRUNCATION,
    intermediate_degree: int | None = None,
) -> VoaElement:
    """
    ζ_{α_1}∘...∘ζ_{α_n}(v), ζ_{α_n} applied first.

    Args:
        alphas: screening momenta, leftmost operator first
        v: any element
        truncation: degree cut of the result; None is exact for integral pairings
        intermediate_degree: degree cut of the intermediate states; 2000 for
            n = 2, 120 for n = 3 and 40 beyond when omitted

    Raises:
        NonConvergent: fractional exponents without a truncation
    """
    lattice = v.lattice
    truncation = min_truncation(truncation, v.truncation)
    if truncation is None:
        middle = None
    else:
        middle = max(truncation, intermediate_degree or default_intermediate_degree(len(alphas)))
    state: dict[StateKey, Coefficient] = {(u, (), beta): c for (u, beta), c in v}
    for step, gamma in enumerate(reversed(alphas)):
        limit = truncation if step == len(alphas) - 1 else middle
        state = _screen(lattice, gamma, state, limit)
        logger.debug(f"Screening step {step + 1}/{len(alphas)} by ζ_{gamma}: {len(state)} states")
    return _expand(lattice, state, truncation)


def screening_params(lattice: Lattice, alphas: Sequence[LatticePoint], lam: LatticePoint) -> MonodromyParams:
    """m_i = (α_i, λ), m_ij = (α_i, α_j)"""
    n = len(alphas)
    return MonodromyParams(
        tuple(lattice.inner(alpha, lam) for alpha in alphas),
        {(i, j): lattice.inner(alphas[i - 1], alphas[j - 1]) for i in range(1, n + 1) for j in range(i + 1, n + 1)},
    )


def screening_product_formula(
    alphas: Sequence[LatticePoint],
    v: VoaElement,
    truncation: int = DEFAULT_TRUNCATION,
    tol: float = 1e-8,
    shell_cap: int | None = None,
    strict: bool = True,
    jobs: int = 1,
) -> VoaElement:
    """
    ζ_{α_1}···ζ_{α_n} e^{φ_λ} = Σ_k F₋((m_i + k_i, m_ij))·∏P_{α_i,k_i}·e^{φ_{λ+Σα}}, Σk ≤ truncation.

    Raises:
        PreconditionError: v is not a multiple of a pure exponential, or n = 0
        NonConvergent: truncation is None
        Diverged, ShellCap: from f_minus
    """
    if not alphas:
        raise PreconditionError("The formula route needs at least one screening.")
    if truncation is None:
        raise NonConvergent("The formula route sums over all k; pass a finite truncation.")
    if len(v) != 1 or not next(iter(v.terms))[0].is_one():
        raise PreconditionError(f"The formula route acts on a pure exponential, got {v}.")
    lattice = v.lattice
    (_, lam), c = next(iter(v))
    p = screening_params(lattice, alphas, lam)
    labels = [tuple(int(x) for x in row) for total in range(truncation + 1) for row in compositions(total, len(alphas))]
    reports = ordered_map(lambda k: f_minus(p.shifted(k), tol, shell_cap, strict), labels, jobs)
    target = lam
    for alpha in alphas:
        target = target + alpha
    terms: dict[TermKey, Coefficient] = {}
    for k, report in zip(labels, reports):
        factors = tuple(sorted((alpha, ki) for alpha, ki in zip(alphas, k) if ki))
        for (u, _), d in _p_product(lattice, factors, truncation):
            accumulate(terms, (u, target), c * report.value * d)
    logger.debug(f"Screening formula n={len(alphas)}: {len(labels)} monodromy numbers")
    return VoaElement(lattice, terms, truncation)
