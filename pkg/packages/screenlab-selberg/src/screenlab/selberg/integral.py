import logging
from functools import lru_cache
from typing import Literal

from screenlab.core import EvalReport, PreconditionError, SizeLimit, beta
from .convergence import require_convergent
from .monte_carlo import DEFAULT_RELATIVE_ERROR, DEFAULT_SAMPLE_CAP, selberg_monte_carlo
from .params import SelbergParams
from .quadrature import DEFAULT_NODE_BUDGET, selberg_quadrature

logger = logging.getLogger(__name__)

type SelbergMethod = Literal["quadrature", "monte_carlo"]

QUADRATURE_MAX_N = 3
MONTE_CARLO_MAX_N = 6


def selberg(
    p: SelbergParams,
    tol: float = 1e-8,
    method: SelbergMethod | None = None,
    seed: int = 0,
    sample_cap: int = DEFAULT_SAMPLE_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    relative_error: float = DEFAULT_RELATIVE_ERROR,
) -> EvalReport:
    """
    Sel(m; m̄; m_ij) = ∫_{1>z_1>...>z_n>0} ∏ z_i^{m_i}(1−z_i)^{m̄_i} ∏_{i<j}(z_i−z_j)^{m_ij} dz.

    n ≤ 1 is closed form, n ≤ 3 quadrature and 4 ≤ n ≤ 6 Monte Carlo unless
    method says otherwise. Results are memoized per argument tuple.

    Args:
        p: parameters
        tol: absolute tolerance of the quadrature
        method: force "quadrature" (n ≤ 3) or "monte_carlo" (n ≤ 6)
        seed: Monte Carlo seed
        sample_cap: Monte Carlo sample cap
        node_budget: quadrature node cap
        relative_error: Monte Carlo target relative standard error

    Raises:
        PreconditionError: divergent parameters, or a method outside its range of n
        SizeLimit: n > 6
        Budget: node or sample cap reached
    """
    return _selberg(p, tol, method, seed, sample_cap, node_budget, relative_error)


@lru_cache(maxsize=4096)
def _selberg(p, tol, method, seed, sample_cap, node_budget, relative_error) -> EvalReport:
    check = require_convergent(p)
    if p.n == 0:
        return EvalReport(1, 0.0, 0, True, "closed_form", "Sel()")
    if p.n == 1 and method is None:
        return EvalReport(beta(p.m[0] + 1, p.mbar[0] + 1), 0.0, 1, True, "closed_form", "Sel(Beta)")
    if p.n > MONTE_CARLO_MAX_N:
        raise SizeLimit(f"Selberg integrals are supported up to n={MONTE_CARLO_MAX_N}, got n={p.n}.")
    chosen = method or ("quadrature" if p.n <= QUADRATURE_MAX_N else "monte_carlo")
    if chosen == "quadrature":
        if p.n > QUADRATURE_MAX_N:
            raise PreconditionError(f"Quadrature is limited to n <= {QUADRATURE_MAX_N}, got n={p.n}.")
        return selberg_quadrature(p, tol, float(check.slack), node_budget)
    if chosen == "monte_carlo":
        return selberg_monte_carlo(p, relative_error, seed, sample_cap)
    raise PreconditionError(f"Unknown Selberg method {method!r}.")


def clear_cache() -> None:
    _selberg.cache_clear()
