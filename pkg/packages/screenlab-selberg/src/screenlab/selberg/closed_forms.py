"""Closed forms and the reduction that integrates out z_1."""
import math
from fractions import Fraction

from screenlab.core import PoleError, PreconditionError, beta, log_gamma, parse_rational
from .params import SelbergParams


def selberg_closed_n2(m1, m2, m12) -> complex:
    """
    Sel(m_1, m_2; 0; m_12) = B(m_2+1, m_12+1) / (2 + m_1 + m_2 + m_12).

    Raises:
        PoleError: zero denominator or a Beta pole
    """
    m1, m2, m12 = (parse_rational(x) for x in (m1, m2, m12))
    denominator = 2 + m1 + m2 + m12
    if denominator == 0:
        raise PoleError(f"Sel({m1}, {m2}; 0; {m12}) has a pole: 2 + m1 + m2 + m12 = 0.")
    return beta(m2 + 1, m12 + 1) / float(denominator)


def selberg_product_formula(a, b, c, k: int) -> complex:
    """
    The classical k-fold Selberg integral restricted to the ordered simplex,

    (1/k!) ∏_{j<k} Γ(a+jc)Γ(b+jc)Γ(1+(j+1)c) / (Γ(a+b+(k+j−1)c)Γ(1+c)),

    i.e. Sel with m_i = a−1, m̄_i = b−1, m_ij = 2c.

    Raises:
        PoleError: a Gamma argument at a non-positive integer
    """
    a, b, c = (parse_rational(x) for x in (a, b, c))
    log_value, sign = -math.lgamma(k + 1), 1.0
    for j in range(k):
        for x, power in (
            (a + j * c, 1),
            (b + j * c, 1),
            (1 + (j + 1) * c, 1),
            (a + b + (k + j - 1) * c, -1),
            (1 + c, -1),
        ):
            magnitude, s = log_gamma(x)
            log_value += power * magnitude
            sign *= s
    return complex(sign * math.exp(log_value))


def selberg_reduce_first(p: SelbergParams) -> tuple[complex, SelbergParams]:
    """
    Integrate out z_1 after substituting z_i = z_1·w_i.

    Args:
        p: parameters with every m̄_i = 0

    Returns:
        (1/(n + Σm_i + Σm_ij), parameters on w_2..w_n with m̄'_i = m_1i)

    Raises:
        PoleError: n + Σm_i + Σm_ij = 0
        PreconditionError: some m̄_i ≠ 0
    """
    if p.has_bar():
        raise PreconditionError(f"Reduction needs m̄ = 0, got {p.mbar}.")
    denominator = p.n + sum(p.m, Fraction(0)) + sum(p.mm.values(), Fraction(0))
    if denominator == 0:
        raise PoleError(f"Reduction prefactor 1/(n + Σm + Σm_ij) has a pole for {p}.")
    remaining = range(2, p.n + 1)
    reduced = SelbergParams(
        tuple(p.m[i - 1] for i in remaining),
        tuple(p.mm[(1, i)] for i in remaining),
        {(i - 1, j - 1): v for (i, j), v in p.mm.items() if i >= 2},
    )
    return 1 / float(denominator) + 0j, reduced
