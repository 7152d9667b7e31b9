"""
Adaptive Monte Carlo for n ≥ 4 with vegas.

Each cube axis is first pre-mapped by u = (1 − (1 − x)^{1/β})^{1/α}, which takes
out the u^{α−1} power at 0 and the (1 − u)^{β−1} power of the adjacent pair at 1.
vegas then stratifies and adapts its grid to what remains, most of it on the
faces where several z_i meet.
"""
import logging
import math
from fractions import Fraction

import numpy as np
import vegas

from screenlab.core import Budget, EvalReport, format_rational
from .params import SelbergParams
from .quadrature import CubeIntegrand

logger = logging.getLogger(__name__)

DEFAULT_SAMPLE_CAP = 10_000_000
DEFAULT_RELATIVE_ERROR = 1e-3
FIRST_NEVAL = 20_000
ADAPT_ITERATIONS = 10
FINAL_ITERATIONS = 10
FINAL_ALPHA = 0.1
_ABOVE_ZERO = float(np.nextafter(0.0, 1.0))
_BELOW_ONE = float(np.nextafter(1.0, 0.0))


class SimplexIntegrand(vegas.BatchIntegrand):
    """Sel(p) as a batch integrand on [0,1]^n, endpoint powers mapped away."""

    def __init__(self, p: SelbergParams):
        self._cube = CubeIntegrand(p)
        self._alpha = np.array([float(e) + 1 for e in p.cube_exponents()])
        adjacent = [p.mbar[0]] + [p.mm[(l - 1, l)] for l in range(2, p.n + 1)]
        self._beta = np.array([1.0 + min(0.0, float(x)) for x in adjacent])
        self._separable = not p.has_bar() and not any(p.mm.values())
        self._constant = math.prod(Fraction(1) / (e + 1) for e in p.cube_exponents())

    def constant_value(self) -> Fraction | None:
        """The exact value when the mapped integrand is constant, that is without m̄ or pair factors."""
        return self._constant if self._separable else None

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.clip(x, _ABOVE_ZERO, _BELOW_ONE)
        log_1mx = np.log1p(-x)
        log_v = np.log(-np.expm1(log_1mx / self._beta))
        log_u = log_v / self._alpha
        log_1mu = np.log(-np.expm1(log_u))
        log_jacobian = (
            -np.log(self._alpha) - np.log(self._beta)
            + (1 / self._alpha - 1) * log_v
            + (1 / self._beta - 1) * log_1mx
        ).sum(axis=1)
        columns = range(x.shape[1])
        log_value = self._cube.log_value([log_u[:, l] for l in columns], [log_1mu[:, l] for l in columns])
        return np.exp(log_value + log_jacobian)


def selberg_monte_carlo(
    p: SelbergParams,
    relative_error: float = DEFAULT_RELATIVE_ERROR,
    seed: int = 0,
    sample_cap: int = DEFAULT_SAMPLE_CAP,
) -> EvalReport:
    """
    vegas estimate of Sel(p): one adaptation run whose results are dropped, then
    final runs with doubled neval until sdev ≤ relative_error·|mean|.

    All random numbers come from default_rng(seed), so a seed fixes the value
    bit for bit.

    Raises:
        Budget: sample_cap evaluations spent first
    """
    label = "Sel-mc(" + ",".join(format_rational(x) for x in p.m) + ")"
    integrand = SimplexIntegrand(p)
    if (exact := integrand.constant_value()) is not None:
        return EvalReport(complex(float(exact)), 0.0, 0, True, "monte_carlo", label)
    rng = np.random.default_rng(seed)
    integrator = vegas.Integrator(p.n * [[0, 1]], ran_array_generator=rng.random)
    neval = min(FIRST_NEVAL, sample_cap)
    integrator(integrand, nitn=ADAPT_ITERATIONS, neval=neval)
    spent = ADAPT_ITERATIONS * neval
    while True:
        result = integrator(integrand, nitn=FINAL_ITERATIONS, neval=neval, alpha=FINAL_ALPHA)
        spent += FINAL_ITERATIONS * neval
        mean, sdev = float(result.mean), float(result.sdev)
        logger.debug(f"{label}: neval {neval}, {spent} evaluations, {mean:.8g} ± {sdev:.2g}, Q = {result.Q:.2f}")
        if sdev <= relative_error * abs(mean):
            return EvalReport(mean, sdev, spent, True, "monte_carlo", label)
        neval *= 2
        if spent + FINAL_ITERATIONS * neval > sample_cap:
            raise Budget(
                f"{label}: {spent} evaluations, next run would pass the cap {sample_cap}; "
                f"standard error {sdev:.3g} above {relative_error:g}·|{mean:.6g}|."
            )
