"""
Quantum monodromy numbers as series over shells of total degree.

F₋((m_i, m_ij)) = Σ_{k_ij ≥ 0} ∏_{i<j} (−1)^{k_ij} C(m_ij, k_ij) ∏_i Res(z_i^{E_i}),
E_i = m_i + Σ_{j>i}(m_ij − k_ij) + Σ_{j<i} k_ji,

summed in shells K = Σ k_ij, ascending. Each residue factor is evaluated by
the per-factor definition, so integral exponents never need the fractured
closed form.
"""
import itertools
import logging
import math
from collections.abc import Callable
from fractions import Fraction
from functools import lru_cache

import numpy as np

from screenlab.core import (
    Diverged,
    EvalReport,
    PreconditionError,
    ShellCap,
    binomial_row,
    cycle_factor,
    format_rational,
    is_integer,
)
from .params import MonodromyParams
from .residue import res_shifted

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8
STABLE_SHELLS = 4
SHELL_BATCH = 256
TREND_MIN_SHELLS = 32
TREND_SLOPE = 0.1
DEFAULT_SHELL_CAPS = {1: 400, 2: 400, 3: 120}
DEFAULT_SHELL_CAP = 40

type ShellBatch = Callable[[int, int], np.ndarray]


def default_shell_cap(n: int) -> int:
    return DEFAULT_SHELL_CAPS.get(n, DEFAULT_SHELL_CAP)


class ShellSummation:
    """
    Ascending partial sums over shells with the stabilization rule.

    Converged once STABLE_SHELLS consecutive shells at or beyond the horizon
    are smaller than tol. A sustained power-law growth of the shell magnitudes
    raises Diverged; reaching the cap raises ShellCap unless strict is off.
    """

    def __init__(self, label: str, tol: float, shell_cap: int, horizon: int = 0, strict: bool = True):
        self._label = label
        self._tol = tol
        self._shell_cap = shell_cap
        self._horizon = horizon
        self._strict = strict

    def run(self, shell_batch: ShellBatch, terms_per_shell: Callable[[int], int] = lambda k: 1) -> EvalReport:
        total = 0j
        quiet = 0
        terms = 0
        magnitudes: list[float] = []
        k = 0
        while k <= self._shell_cap:
            stop = min(k + SHELL_BATCH, self._shell_cap + 1)
            shells = shell_batch(k, stop)
            for shell in shells.tolist():
                total += shell
                magnitude = abs(shell)
                magnitudes.append(magnitude)
                terms += terms_per_shell(k)
                quiet = quiet + 1 if magnitude < self._tol and k >= self._horizon else 0
                if quiet >= STABLE_SHELLS:
                    logger.debug(f"{self._label}: stable after {k + 1} shells, value {total:.10g}")
                    return EvalReport(total, magnitude, terms, True, "series", self._label)
                k += 1
            self._check_trend(magnitudes)
        message = (
            f"{self._label}: shell cap {self._shell_cap} reached without {STABLE_SHELLS} shells below "
            f"tol={self._tol:g} (last shell {magnitudes[-1]:.3g})."
        )
        if self._strict:
            raise ShellCap(message)
        return EvalReport(total, max(magnitudes[-STABLE_SHELLS:]), terms, False, "series", self._label)

    def _check_trend(self, magnitudes: list[float]) -> None:
        if len(magnitudes) < TREND_MIN_SHELLS or len(magnitudes) <= self._horizon:
            return
        start = len(magnitudes) // 2
        ks = np.arange(start, len(magnitudes), dtype=float)
        values = np.array(magnitudes[start:])
        mask = (values > 0) & (ks > 0)
        if mask.sum() < TREND_MIN_SHELLS // 2 or values[-1] < self._tol:
            return
        slope = float(np.polyfit(np.log(ks[mask]), np.log(values[mask]), 1)[0])
        if slope > TREND_SLOPE:
            raise Diverged(
                f"{self._label}: shell magnitudes grow like K^{slope:.2f} "
                f"(last shell {values[-1]:.3g} at K={len(magnitudes) - 1}); smallness of m_ij fails."
            )


@lru_cache(maxsize=2048)
def _small_compositions(total: int, parts: int) -> np.ndarray:
    if parts == 1:
        return np.array([[total]], dtype=np.int64)
    blocks = [
        np.hstack([np.full((rest.shape[0], 1), first, dtype=np.int64), rest])
        for first in range(total + 1)
        for rest in (_small_compositions(total - first, parts - 1),)
    ]
    return np.vstack(blocks)


def compositions(total: int, parts: int) -> np.ndarray:
    """All ordered (k_1..k_parts) ≥ 0 with Σ k = total, one per row."""
    if parts == 0:
        return np.zeros((1 if total == 0 else 0, 0), dtype=np.int64)
    if parts <= 3:
        return _small_compositions(total, parts)
    bars = np.array(list(itertools.combinations(range(total + parts - 1), parts - 1)), dtype=np.int64)
    bars = bars.reshape(-1, parts - 1)
    edges = np.hstack([np.full((bars.shape[0], 1), -1), bars, np.full((bars.shape[0], 1), total + parts - 1)])
    return np.diff(edges, axis=1) - 1


def _label(name: str, p: MonodromyParams) -> str:
    m = ",".join(format_rational(x) for x in p.m)
    mm = ",".join(format_rational(x) for x in p.mm.values())
    return f"{name}({m};{mm})"


def _horizon(bases) -> int:
    """Shell from which every integral residue exponent can have reached −1."""
    reach = [abs(-1 - int(b)) for b in bases if is_integer(b)]
    return max(reach, default=0)


class _MonodromySeries:
    """Shell values of the (sign)^{k_ij} family for one parameter set."""

    def __init__(self, p: MonodromyParams, sign: int, shell_cap: int):
        self._p = p
        self._pairs = p.pairs()
        self._bases = p.base_exponents()
        self._log_hbar = [math.log(h) for h in p.radii()]
        self._incidence = np.zeros((len(self._pairs), p.n), dtype=np.int64)
        for row, (i, j) in enumerate(self._pairs):
            self._incidence[row, i - 1] = -1
            self._incidence[row, j - 1] = 1
        signs = np.where(np.arange(shell_cap + 1) % 2 == 0, 1.0, float(sign))
        self._coefficient_rows = [binomial_row(p.mm[pair], shell_cap + 1) * signs for pair in self._pairs]

    @property
    def horizon(self) -> int:
        return _horizon(self._bases)

    def terms(self, k: np.ndarray) -> np.ndarray:
        """Series terms at the index rows k (shape T × pairs)."""
        values = np.ones(k.shape[0], dtype=complex)
        for column, row in enumerate(self._coefficient_rows):
            values *= row[k[:, column]]
        shifts = k @ self._incidence
        for i, base in enumerate(self._bases):
            values *= res_shifted(base, shifts[:, i], self._log_hbar[i])
        return values

    def shells(self, start: int, stop: int) -> np.ndarray:
        parts = len(self._pairs)
        if parts == 0:
            return np.array([self.terms(np.zeros((1, 0), dtype=np.int64))[0] if k == 0 else 0j
                             for k in range(start, stop)])
        if parts == 1:
            return self.terms(np.arange(start, stop, dtype=np.int64)[:, None])
        return np.array([self.terms(compositions(k, parts)).sum() for k in range(start, stop)])

    def terms_in_shell(self, k: int) -> int:
        parts = len(self._pairs)
        return math.comb(k + parts - 1, parts - 1) if parts else int(k == 0)


def f_minus(
    p: MonodromyParams,
    tol: float = DEFAULT_TOL,
    shell_cap: int | None = None,
    strict: bool = True,
) -> EvalReport:
    """
    F₋((m_i, m_ij)) at ħ = 1 by shell summation.

    Args:
        p: parameters (any hbar on p is ignored)
        tol: shell magnitude below which a shell counts as quiet
        shell_cap: largest shell index; default 400 / 120 / 40 for n = 2 / 3 / ≥ 4
        strict: raise ShellCap at the cap instead of returning converged=False

    Returns:
        EvalReport with method "series"

    Raises:
        Diverged: growing shells
        ShellCap: cap reached in strict mode
    """
    return _run_family(p.with_hbar(None), -1, tol, shell_cap, strict, "F-")


def f_hbar(
    p: MonodromyParams,
    tol: float = DEFAULT_TOL,
    shell_cap: int | None = None,
    strict: bool = True,
) -> EvalReport:
    """The ħ-regularized F^{ħ_1..ħ_n}, each residue taken on the circle of radius ħ_i."""
    if p.hbar is not None and any(a < b for a, b in zip(p.hbar, p.hbar[1:])):
        logger.warning(f"Radii {p.hbar} are not decreasing; the series may only converge conditionally.")
    return _run_family(p, -1, tol, shell_cap, strict, "F-hbar")


def _run_family(p, sign, tol, shell_cap, strict, name) -> EvalReport:
    cap = default_shell_cap(p.n) if shell_cap is None else shell_cap
    series = _MonodromySeries(p, sign, cap)
    summation = ShellSummation(_label(name, p), tol, cap, series.horizon, strict)
    return summation.run(series.shells, series.terms_in_shell)


def f_plus_n2(
    m_a: Fraction,
    m_b: Fraction,
    m_ab: Fraction,
    tol: float = DEFAULT_TOL,
    shell_cap: int | None = None,
    strict: bool = True,
) -> EvalReport:
    """
    F₊(m_a, m_b; m_ab) = Σ_k Res(t^{m_ab+k}) Res(w^{m_b+m_a−k}) C(m_a, k).

    Same stabilization rule as f_minus.
    """
    m_a, m_b, m_ab = Fraction(m_a), Fraction(m_b), Fraction(m_ab)
    cap = default_shell_cap(2) if shell_cap is None else shell_cap
    coefficients = binomial_row(m_a, cap + 1)
    horizon = _horizon([m_ab, m_a + m_b])

    def shells(start: int, stop: int) -> np.ndarray:
        k = np.arange(start, stop, dtype=np.int64)
        return coefficients[k] * res_shifted(m_ab, k) * res_shifted(m_a + m_b, -k)

    label = f"F+({format_rational(m_a)},{format_rational(m_b)};{format_rational(m_ab)})"
    return ShellSummation(label, tol, cap, horizon, strict).run(shells)


def f_minus_fractured_series(
    m_a: Fraction,
    m_b: Fraction,
    m_ab: Fraction,
    tol: float = DEFAULT_TOL,
    shell_cap: int | None = None,
    strict: bool = True,
) -> EvalReport:
    """
    n = 2 F₋ through its fractured closed-form series

    c(m_b) c(m_a+m_ab) Σ_k (−1)^k C(m_ab, k) / ((m_b+k+1)(m_a+m_ab−k+1)),
    c(x) = (e^{2πix} − 1)/(2πi). Valid only when m_b and m_a+m_ab are fractional.
    """
    m_a, m_b, m_ab = Fraction(m_a), Fraction(m_b), Fraction(m_ab)
    if is_integer(m_b) or is_integer(m_a + m_ab):
        raise PreconditionError(f"Fractured series needs m_b={m_b} and m_a+m_ab={m_a + m_ab} fractional.")
    cap = default_shell_cap(2) if shell_cap is None else shell_cap
    prefactor = cycle_factor(m_b) * cycle_factor(m_a + m_ab)
    signs = np.where(np.arange(cap + 1) % 2 == 0, 1.0, -1.0)
    coefficients = binomial_row(m_ab, cap + 1) * signs

    def shells(start: int, stop: int) -> np.ndarray:
        k = np.arange(start, stop, dtype=float)
        denominators = (float(m_b + 1) + k) * (float(m_a + m_ab + 1) - k)
        return prefactor * coefficients[start:stop] / denominators

    label = f"F-fractured({format_rational(m_a)},{format_rational(m_b)};{format_rational(m_ab)})"
    return ShellSummation(label, tol, cap, 0, strict).run(shells)
