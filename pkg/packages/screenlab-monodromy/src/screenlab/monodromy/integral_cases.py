"""
Closed forms of the n = 2 series when a residue exponent is integral.

An integral exponent makes its residue a Kronecker delta in the summation
index, so at most one term of the series survives.
"""
from fractions import Fraction

from screenlab.core import PreconditionError, binomial, cycle_factor, is_integer


def _signed_binomial(x: Fraction, k: int) -> complex:
    return complex((-1) ** k * binomial(x, k))


def f_minus_integral_case(m_a, m_b, m_ab) -> complex:
    """
    F₋(m_a, m_b; m_ab) when m_b ∈ ℤ or m_a + m_ab ∈ ℤ.

    Args:
        m_a: exponent of the first variable
        m_b: exponent of the second variable
        m_ab: pair exponent

    Returns:
        the single surviving term of the series, or 0

    Raises:
        PreconditionError: both m_b and m_a + m_ab are fractional
    """
    m_a, m_b, m_ab = Fraction(m_a), Fraction(m_b), Fraction(m_ab)
    denominator = m_a + m_b + m_ab + 2
    b_integral = is_integer(m_b)
    a_integral = is_integer(m_a + m_ab)
    if not (a_integral or b_integral):
        raise PreconditionError(f"({m_a}, {m_b}; {m_ab}) is fully fractured; use the series.")
    if b_integral:
        k = int(-m_b - 1)
        if k < 0:
            return 0j
        if a_integral:
            return _signed_binomial(m_ab, k) if denominator == 0 else 0j
        return cycle_factor(m_a + m_ab) / float(denominator) * _signed_binomial(m_ab, k)
    k = int(m_a + m_ab + 1)
    if k < 0:
        return 0j
    return cycle_factor(m_b) / float(denominator) * _signed_binomial(m_ab, k)


def f_plus_integral_case(m_a, m_b, m_ab) -> complex:
    """
    F₊(m_a, m_b; m_ab) when m_ab ∈ ℤ or m_a + m_b ∈ ℤ.

    Raises:
        PreconditionError: both m_ab and m_a + m_b are fractional
    """
    m_a, m_b, m_ab = Fraction(m_a), Fraction(m_b), Fraction(m_ab)
    denominator = m_a + m_b + m_ab + 2
    t_integral = is_integer(m_ab)
    w_integral = is_integer(m_a + m_b)
    if not (t_integral or w_integral):
        raise PreconditionError(f"F+({m_a}, {m_b}; {m_ab}) is fully fractured; use the series.")
    if t_integral:
        k = int(-m_ab - 1)
        if k < 0:
            return 0j
        if w_integral:
            return complex(binomial(m_a, k)) if denominator == 0 else 0j
        return cycle_factor(m_a + m_b) / float(denominator) * complex(binomial(m_a, k))
    k = int(m_a + m_b + 1)
    if k < 0:
        return 0j
    return cycle_factor(m_ab) / float(denominator) * complex(binomial(m_a, k))
