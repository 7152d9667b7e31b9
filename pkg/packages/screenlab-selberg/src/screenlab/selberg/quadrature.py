"""
Iterated double-exponential quadrature on the unit cube.

After z_j = u_1···u_j the simplex becomes [0,1]^n and every singularity of
the integrand sits on a face or an edge of the cube. Each axis uses the
tanh-sinh rule u = 1/(1 + e^{−π sinh t}); all factors are kept in log space so
that nodes within e^{−700} of an endpoint stay meaningful.
"""
import logging
import math

import numpy as np

from screenlab.core import Budget, EvalReport, format_rational
from .params import SelbergParams

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 4_000_000
MAX_ENDPOINT_DEPTH = 700.0
MIN_ENDPOINT_DEPTH = 20.0
FIRST_STEP = 0.5
MIN_LEVELS = 3


class _AxisRule:
    """log u, log(1−u) and log(weight) of the tanh-sinh nodes with step h."""

    def __init__(self, h: float, depth: float):
        t_max = math.asinh(depth / math.pi)
        k = math.floor(t_max / h)
        t = np.arange(-k, k + 1) * h
        s = math.pi * np.sinh(t)
        self.log_u = -np.logaddexp(0.0, -s)
        self.log_1mu = -np.logaddexp(0.0, s)
        self.log_weight = math.log(h) + np.log(math.pi * np.cosh(t)) + self.log_u + self.log_1mu

    def __len__(self) -> int:
        return self.log_u.size


def endpoint_depth(slack: float, tol: float) -> float:
    """
    How close to an endpoint, as −log distance, the rule must reach.

    A local singularity x^{slack−1} leaves mass x^{slack}/slack below x.
    """
    needed = (math.log(1 / tol) + 10.0) / max(slack, 1e-12)
    return min(MAX_ENDPOINT_DEPTH, max(MIN_ENDPOINT_DEPTH, needed))


class CubeIntegrand:
    """The simplex integrand pulled back to the cube, evaluated in logs."""

    def __init__(self, p: SelbergParams):
        self._n = p.n
        self._exponents = [float(e) for e in p.cube_exponents()]
        self._pairs = [(i, j, float(v)) for (i, j), v in p.mm.items() if v != 0]
        self._bars = [(i, float(v)) for i, v in enumerate(p.mbar, start=1) if v != 0]

    def log_value(self, log_u: list[np.ndarray], log_1mu: list[np.ndarray]) -> np.ndarray:
        """
        log of the integrand (Jacobian included) at broadcastable per-axis arrays.

        Complements 1 − u_{i+1}···u_j are built as (1−u_{i+1}) + u_{i+1}(1 − u_{i+2}···u_j)
        so no cancellation occurs near the corners.
        """
        u = [None] + [np.exp(x) for x in log_u]
        one_minus = [None] + [np.exp(x) for x in log_1mu]
        total = sum(e * x for e, x in zip(self._exponents, log_u))
        complements = {}
        for j in range(1, self._n + 1):
            q = one_minus[j]
            complements[(j - 1, j)] = q
            for i in range(j - 2, -1, -1):
                q = one_minus[i + 1] + u[i + 1] * q
                complements[(i, j)] = q
        for i, j, m in self._pairs:
            total = total + m * np.log(complements[(i, j)])
        for i, m in self._bars:
            total = total + m * np.log(complements[(0, i)])
        return total


def _trapezoid(integrand: CubeIntegrand, n: int, rule: _AxisRule) -> float:
    def axis(l: int, shape_rank: int, x: np.ndarray) -> np.ndarray:
        shape = [1] * shape_rank
        shape[l] = x.size
        return x.reshape(shape)

    if n <= 2:
        log_u = [axis(l, n, rule.log_u) for l in range(n)]
        log_1mu = [axis(l, n, rule.log_1mu) for l in range(n)]
        log_w = sum(axis(l, n, rule.log_weight) for l in range(n))
        return float(np.exp(integrand.log_value(log_u, log_1mu) + log_w).sum())
    rest = n - 1
    log_u_rest = [axis(l, rest, rule.log_u) for l in range(rest)]
    log_1mu_rest = [axis(l, rest, rule.log_1mu) for l in range(rest)]
    log_w_rest = sum(axis(l, rest, rule.log_weight) for l in range(rest))
    total = 0.0
    for a, b, w in zip(rule.log_u, rule.log_1mu, rule.log_weight):
        values = integrand.log_value([np.asarray(a)] + log_u_rest, [np.asarray(b)] + log_1mu_rest)
        total += float(np.exp(values + log_w_rest + w).sum())
    return total


def selberg_quadrature(
    p: SelbergParams,
    tol: float,
    slack: float,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> EvalReport:
    """
    Refine h = 1/2, 1/4, ... until two successive levels agree to tol.

    Args:
        p: convergent parameters, 1 ≤ n ≤ 3
        tol: absolute tolerance
        slack: smallest margin of the convergence inequalities
        node_budget: largest admissible number of grid nodes

    Returns:
        EvalReport with the finer level's value and |I_h − I_{h/2}| as error estimate

    Raises:
        Budget: the next refinement would exceed node_budget
    """
    integrand = CubeIntegrand(p)
    depth = endpoint_depth(slack, tol)
    label = "Sel(" + ",".join(format_rational(x) for x in p.m) + ")"
    h = FIRST_STEP
    previous = None
    level = 0
    while True:
        rule = _AxisRule(h, depth)
        nodes = len(rule) ** p.n
        if nodes > node_budget:
            estimate = "n/a" if previous is None else f"{previous:.10g}"
            raise Budget(
                f"{label}: {nodes} nodes at h={h:g} exceed the budget {node_budget} "
                f"before reaching tol={tol:g} (last value {estimate})."
            )
        value = _trapezoid(integrand, p.n, rule)
        level += 1
        logger.debug(f"{label}: h={h:g}, {nodes} nodes, value {value:.14g}")
        if previous is not None and level >= MIN_LEVELS:
            error = abs(value - previous)
            if error < tol:
                return EvalReport(value, error, nodes, True, "quadrature", label)
        previous = value
        h /= 2
