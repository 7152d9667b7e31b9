from dataclasses import dataclass, field
from fractions import Fraction

from screenlab.core import PreconditionError
from .params import SelbergParams


@dataclass(frozen=True)
class ConvergenceCheck:
    """Outcome of the three families of convergence inequalities."""
    ok: bool
    violations: list[str] = field(default_factory=list)
    slack: Fraction | None = None

    def __bool__(self) -> bool:
        return self.ok


def _pair_sum(p: SelbergParams, lo: int, hi: int) -> Fraction:
    """Σ_{lo≤i<j≤hi} m_ij"""
    return sum((v for (i, j), v in p.mm.items() if lo <= i and j <= hi), Fraction(0))


def selberg_convergent(p: SelbergParams) -> ConvergenceCheck:
    """
    Check the integral's convergence conditions exactly; boundaries count as divergent.

    (i) coinciding z_r..z_s, (ii) z_1..z_r → 1, (iii) z_r..z_n → 0.
    The slack is the smallest margin over all inequalities.
    """
    n = p.n
    violations = []
    margins = []

    def check(label: str, total: Fraction, bound: int) -> None:
        margins.append(total - bound)
        if not total > bound:
            violations.append(f"{label}: {total} is not > {bound}")

    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            check(f"(i) r={r}, s={s}", _pair_sum(p, r, s), -(s - r))
    for r in range(1, n + 1):
        check(f"(ii) r={r}", sum(p.mbar[:r], Fraction(0)) + _pair_sum(p, 1, r), -r)
    for r in range(1, n + 1):
        check(f"(iii) r={r}", sum(p.m[r - 1:], Fraction(0)) + _pair_sum(p, r, n), -(n - r + 1))
    return ConvergenceCheck(not violations, violations, min(margins, default=None))


def require_convergent(p: SelbergParams) -> ConvergenceCheck:
    """
    Raises:
        PreconditionError: listing every violated inequality
    """
    check = selberg_convergent(p)
    if not check:
        raise PreconditionError(f"Selberg integral diverges for {p}: {'; '.join(check.violations)}")
    return check
