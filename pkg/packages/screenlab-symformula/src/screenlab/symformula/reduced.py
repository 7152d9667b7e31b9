"""
Reduced quantum monodromy numbers F̃₋ as alternating sums of 2ⁿ Selberg integrals.

F̃₋((m_i, m_ij)) = (2πi)⁻ⁿ Σ_k (−1)^k ∏_{i>k} e^{2πi m_i}
                  Σ_{η ∈ S_{k,n−k}} ∏_{i<j, η(i)>η(j)} e^{πi m_ij} Sel(m_{η⁻¹(r)}; 0; m_{η⁻¹(r)η⁻¹(s)})
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from screenlab.core import (
    EvalReport,
    Permutation,
    PhaseExponent,
    format_rational,
    inversions,
    ordered_map,
    phase_eval,
    shuffles,
)
from screenlab.monodromy import MonodromyParams, check_smallness
from screenlab.selberg import SelbergParams, selberg, selberg_reduce_first
from screenlab.selberg.integral import SelbergMethod
from screenlab.selberg.monte_carlo import DEFAULT_RELATIVE_ERROR, DEFAULT_SAMPLE_CAP
from screenlab.selberg.quadrature import DEFAULT_NODE_BUDGET

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelbergPiece:
    """One of the 2ⁿ terms: (−1)^k times a phase times Sel(params)."""
    k: int
    eta: Permutation
    phase: PhaseExponent
    params: SelbergParams

    @property
    def coefficient(self) -> complex:
        return (-1) ** self.k * phase_eval(self.phase)


def selberg_pieces(p: MonodromyParams) -> list[SelbergPiece]:
    pieces = []
    for k in range(p.n + 1):
        tail = PhaseExponent(2 * sum(p.m[k:], Fraction(0)))
        for eta in shuffles(k, p.n):
            phase = tail
            for i, j in inversions(eta):
                phase = phase * PhaseExponent(p.pair(i, j))
            relabeled = p.permuted(eta)
            pieces.append(SelbergPiece(k, eta, phase, SelbergParams(relabeled.m, (), relabeled.mm)))
    return pieces


def _combined_method(reports: list[EvalReport]) -> str:
    methods = {r.method for r in reports}
    if "monte_carlo" in methods:
        return "monte_carlo"
    if "quadrature" in methods:
        return "quadrature"
    return "closed_form"


def f_tilde(
    p: MonodromyParams,
    tol: float = 1e-8,
    jobs: int = 1,
    method: SelbergMethod | None = None,
    reduce: bool = True,
    seed: int = 0,
    sample_cap: int = DEFAULT_SAMPLE_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    relative_error: float = DEFAULT_RELATIVE_ERROR,
) -> EvalReport:
    """
    F̃₋ from its Selberg pieces, each evaluated to tol/2ⁿ.

    With reduce on (the default) every piece first integrates out z_1 in
    closed form, so n = 2 needs only Beta functions and n = 4 stays within
    reach of the 3-d quadrature.

    Args:
        p: parameters (hbar is ignored)
        tol: absolute tolerance of the sum
        jobs: workers for the pieces
        method: forwarded to selberg
        reduce: integrate out z_1 before evaluating
        seed: Monte Carlo seed
        sample_cap: Monte Carlo sample cap
        node_budget: quadrature node cap
        relative_error: Monte Carlo target relative standard error

    Returns:
        EvalReport whose error estimate is the sum of the piece estimates over (2π)ⁿ

    Raises:
        SmallnessError: smallness fails
        PoleError: a piece sits on a pole
    """
    check_smallness(p)
    pieces = selberg_pieces(p)
    piece_tol = tol / len(pieces)
    options = dict(method=method, seed=seed, sample_cap=sample_cap, node_budget=node_budget,
                   relative_error=relative_error)

    def evaluate(piece: SelbergPiece) -> EvalReport:
        if reduce and piece.params.n >= 2:
            prefactor, reduced = selberg_reduce_first(piece.params)
            report = selberg(reduced, piece_tol / abs(prefactor), **options)
            return EvalReport(prefactor * report.value, abs(prefactor) * report.abs_error_estimate,
                              report.terms_or_nodes, report.converged, report.method, report.label)
        return selberg(piece.params, piece_tol, **options)

    reports = ordered_map(evaluate, pieces, jobs)
    norm = (2j * math.pi) ** p.n
    value = sum((piece.coefficient * r.value for piece, r in zip(pieces, reports)), 0j) / norm
    error = sum(r.abs_error_estimate for r in reports) / abs(norm)
    label = "F~(" + ",".join(format_rational(x) for x in p.m) + ";" + ",".join(
        format_rational(x) for x in p.mm.values()) + ")"
    logger.debug(f"{label}: {len(pieces)} Selberg pieces, value {value:.10g}")
    return EvalReport(
        value,
        error,
        sum(r.terms_or_nodes for r in reports),
        all(r.converged for r in reports),
        _combined_method(reports),
        label,
    )
