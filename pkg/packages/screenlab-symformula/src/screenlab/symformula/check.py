"""
Numerical checks of the quantum symmetrizer formula

F₋((m_i, m_ij)) = Σ_σ q(σ) F̃₋((m_{σ⁻¹(i)}, m_{σ⁻¹(i)σ⁻¹(j)})),

with q(σ) the braiding factor of the word whose i-th letter has color i and
q_ij = e^{πi m_ij}.
"""
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from screenlab.core import (
    BraidingMatrix,
    EvalReport,
    Permutation,
    SizeLimit,
    all_permutations,
    braiding_factor,
    ordered_map,
    parse_rational,
    phase_eval,
)
from screenlab.monodromy import MonodromyParams, check_smallness, f_minus
from screenlab.nichols import WordCombination
from .reduced import f_tilde

logger = logging.getLogger(__name__)

DETERMINISTIC_MAX_N = 4
MONTE_CARLO_MAX_N = 6
MONTE_CARLO_TOL = 1e-2
RESIDUAL_FLOOR = 1e-4


@dataclass(frozen=True)
class SymmetrizerCheckReport:
    """Both sides of the symmetrizer formula for one parameter set."""
    lhs: complex
    rhs: complex
    residual: float
    terms: dict[Permutation, complex]
    lhs_error: float
    rhs_error: float
    tolerances: dict[str, float] = field(default_factory=dict)

    @property
    def propagated_error(self) -> float:
        return self.lhs_error + self.rhs_error

    def passed(self, floor: float = RESIDUAL_FLOOR) -> bool:
        return self.residual < max(floor, 10 * self.propagated_error)

    def to_dict(self) -> dict:
        return {
            "lhs": {"re": self.lhs.real, "im": self.lhs.imag},
            "rhs": {"re": self.rhs.real, "im": self.rhs.imag},
            "residual": self.residual,
            "propagated_error": self.propagated_error,
            "terms": {str(sigma): {"re": v.real, "im": v.imag} for sigma, v in self.terms.items()},
            "tolerances": dict(self.tolerances),
            "passed": self.passed(),
        }


def position_braiding(p: MonodromyParams) -> BraidingMatrix:
    """q_ij = e^{πi m_ij} between positions i ≠ j; the diagonal is never read."""
    return BraidingMatrix.from_gram(
        [[p.pair(i, j) if i != j else 0 for j in range(1, p.n + 1)] for i in range(1, p.n + 1)]
    )


def verify_symmetrizer(
    p: MonodromyParams,
    tol: float = 1e-8,
    monte_carlo: bool = False,
    jobs: int = 1,
    series_tol: float | None = None,
    shell_cap: int | None = None,
    seed: int = 0,
) -> SymmetrizerCheckReport:
    """
    Evaluate F₋ by its series and Ш_q F̃₋ by Selberg integrals.

    Args:
        p: parameters (hbar is ignored)
        tol: tolerance of every F̃₋ evaluation
        monte_carlo: allow n = 5, 6 with Monte Carlo pieces at relative error 1e−2
        jobs: workers over the n! permutations
        series_tol: shell tolerance of F₋, tol when omitted
        shell_cap: shell cap of F₋; the series is summed non-strictly
        seed: Monte Carlo seed

    Raises:
        SmallnessError: smallness fails
        SizeLimit: n > 4 without monte_carlo, or n > 6
    """
    check_smallness(p)
    if p.n > MONTE_CARLO_MAX_N:
        raise SizeLimit(f"Symmetrizer check is supported up to n={MONTE_CARLO_MAX_N}, got n={p.n}.")
    if p.n > DETERMINISTIC_MAX_N and not monte_carlo:
        raise SizeLimit(f"n={p.n} needs Monte Carlo Selberg pieces; pass monte_carlo=True.")
    series_tol = tol if series_tol is None else series_tol
    options = {"seed": seed}
    tolerances = {"selberg": tol, "series": series_tol}
    if monte_carlo:
        options["relative_error"] = MONTE_CARLO_TOL
        tolerances["monte_carlo_relative"] = MONTE_CARLO_TOL

    lhs = f_minus(p.with_hbar(None), series_tol, shell_cap, strict=False)
    q = position_braiding(p)
    coloring = tuple(range(p.n))
    sigmas = all_permutations(p.n)
    reports = ordered_map(lambda sigma: f_tilde(p.permuted(sigma), tol, **options), sigmas, jobs)
    terms = {
        sigma: phase_eval(braiding_factor(q, coloring, sigma)) * report.value
        for sigma, report in zip(sigmas, reports)
    }
    rhs = sum(terms.values(), 0j)
    report = SymmetrizerCheckReport(
        lhs=lhs.value,
        rhs=rhs,
        residual=abs(lhs.value - rhs),
        terms=terms,
        lhs_error=lhs.abs_error_estimate,
        rhs_error=sum(r.abs_error_estimate for r in reports),
        tolerances=tolerances,
    )
    logger.info(f"Symmetrizer check n={p.n}: residual {report.residual:.3g}, propagated {report.propagated_error:.3g}")
    return report


def colored_params(
    word: Sequence[int],
    gram: Sequence[Sequence],
    weights: Sequence,
    shifts: Sequence[int] | None = None,
) -> MonodromyParams:
    """m_i = weights[f_i] + shifts[f_i] and m_ij = gram[f_i][f_j] for the colored word f."""
    shifts = shifts or [0] * len(weights)
    m = [parse_rational(weights[c]) + shifts[c] for c in word]
    mm = {
        (i, j): parse_rational(gram[word[i - 1]][word[j - 1]])
        for i in range(1, len(word) + 1)
        for j in range(i + 1, len(word) + 1)
    }
    return MonodromyParams(tuple(m), mm)


def relation_monodromy_sum(
    w: WordCombination,
    gram: Sequence[Sequence],
    weights: Sequence,
    shifts: Sequence[int] | None = None,
    tol: float = 1e-8,
    shell_cap: int | None = None,
    jobs: int = 1,
) -> EvalReport:
    """
    Σ_f c_f F₋(colored params of f).

    When Ш_q(w) = 0 for q = e^{πi·gram}, the symmetrizer formula turns the sum
    into Σ_g (Ш_q w)_g F̃₋(g) = 0.
    """
    words = sorted(w.terms)
    reports = ordered_map(
        lambda f: f_minus(colored_params(f, gram, weights, shifts), tol, shell_cap, strict=False), words, jobs
    )
    value = sum((w.terms[f] * r.value for f, r in zip(words, reports)), 0j)
    error = sum(abs(w.terms[f]) * r.abs_error_estimate for f, r in zip(words, reports))
    return EvalReport(
        value,
        error,
        sum(r.terms_or_nodes for r in reports),
        all(r.converged for r in reports),
        "series",
        f"Σ c_f F-(f), {len(words)} words",
    )
