"""
The lifted-torus integral behind F^ħ.

With z_i = ħ_i e^{i t_i}, t_i ∈ [0, 2π], and the principal branch of
(1 − z_j/z_i)^{m_ij} for |z_j| < |z_i|,

F^ħ = ∏ ħ_i^{m_i + Σ_{j>i} m_ij + 1} (2π)⁻ⁿ
      ∫ exp(i(Σ t_i(1+m_i) + Σ_{i<j} m_ij(t_i + θ_ij))) ∏ r_ij^{m_ij} dt,

r_ij e^{iθ_ij} = 1 − (ħ_j/ħ_i) e^{i(t_j − t_i)}.
"""
import logging
import math

import numpy as np
from numpy.polynomial import legendre

from screenlab.core import Budget, EvalReport, PreconditionError, format_rational
from screenlab.monodromy import MonodromyParams

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 4_000_000
TORUS_TOL = 1e-12
FIRST_ORDER = 16
MAX_N = 2


def scaling_factor(p: MonodromyParams, h: float) -> float:
    """h^{Σm_i + Σm_ij + n}: F^ħ at equal radii h over F₋."""
    return h ** (float(p.total()) + p.n)


def _angle_grid(order: int, n: int) -> tuple[list[np.ndarray], np.ndarray]:
    nodes, weights = legendre.leggauss(order)
    t = math.pi * (nodes + 1.0)
    w = math.pi * weights
    shape = [1] * n
    axes, total_weight = [], np.ones([order] * n)
    for l in range(n):
        shape_l = list(shape)
        shape_l[l] = order
        axes.append(t.reshape(shape_l))
        total_weight = total_weight * w.reshape(shape_l)
    return axes, total_weight


def _torus_value(p: MonodromyParams, order: int) -> complex:
    t, weight = _angle_grid(order, p.n)
    hbar = p.radii()
    phase = sum((1.0 + float(m)) * t_i for m, t_i in zip(p.m, t))
    log_modulus = np.zeros_like(weight)
    for (i, j), m in p.mm.items():
        if m == 0:
            continue
        rho = hbar[j - 1] / hbar[i - 1]
        delta = t[j - 1] - t[i - 1]
        real, imag = 1.0 - rho * np.cos(delta), -rho * np.sin(delta)
        phase = phase + float(m) * (t[i - 1] + np.arctan2(imag, real))
        log_modulus = log_modulus + float(m) * np.log(np.hypot(real, imag))
    integral = complex((weight * np.exp(log_modulus + 1j * phase)).sum())
    prefactor = math.prod(h ** (float(b) + 1.0) for h, b in zip(hbar, p.base_exponents()))
    return prefactor * integral / (2 * math.pi) ** p.n


def torus_integral(
    p: MonodromyParams,
    node_budget: int = DEFAULT_NODE_BUDGET,
    tol: float = TORUS_TOL,
) -> EvalReport:
    """
    Gauss–Legendre quadrature of the lifted-torus integrand, doubling the
    order per axis until two orders agree to tol.

    Args:
        p: parameters with n ≤ 2 and strictly decreasing radii
        node_budget: largest admissible grid size
        tol: absolute tolerance

    Raises:
        PreconditionError: n > 2 or radii not strictly decreasing
        Budget: the next grid would exceed node_budget
    """
    if p.n > MAX_N:
        raise PreconditionError(f"Torus quadrature is limited to n <= {MAX_N}, got n={p.n}.")
    hbar = p.radii()
    if any(a <= b for a, b in zip(hbar, hbar[1:])):
        raise PreconditionError(f"Torus integral needs strictly decreasing radii, got {hbar}.")
    label = "torus(" + ",".join(format_rational(x) for x in p.m) + ")"
    order = FIRST_ORDER
    previous = None
    while True:
        nodes = order ** p.n
        if nodes > node_budget:
            raise Budget(f"{label}: {nodes} nodes exceed the budget {node_budget} before reaching tol={tol:g}.")
        value = _torus_value(p, order)
        logger.debug(f"{label}: order {order}, value {value:.14g}")
        if previous is not None and abs(value - previous) < tol:
            return EvalReport(value, abs(value - previous), nodes, True, "quadrature", label)
        previous = value
        order *= 2
