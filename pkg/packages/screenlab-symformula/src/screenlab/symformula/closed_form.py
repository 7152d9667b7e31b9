import math

from screenlab.core import PoleError, PreconditionError, beta, cycle_factor, is_integer, parse_rational


def f_minus_n2_closed(m1, m2, m12) -> complex:
    """
    F₋ for n = 2 through Beta functions,

    c(m₂) c(m₁+m₁₂)/D · [B(m₂+1, m₁₂+1) + sin(πm₁)/sin(π(m₁+m₁₂)) · B(m₁+1, m₁₂+1)],

    with c(x) = (e^{2πix}−1)/(2πi) and D = m₁+m₂+m₁₂+2.

    Raises:
        PreconditionError: m₁+m₁₂ integral (use the integral-case formulas)
        PoleError: D = 0 or a Beta pole
    """
    m1, m2, m12 = (parse_rational(x) for x in (m1, m2, m12))
    if is_integer(m1 + m12):
        raise PreconditionError(f"Closed form needs m1 + m12 = {m1 + m12} fractional.")
    denominator = m1 + m2 + m12 + 2
    if denominator == 0:
        raise PoleError(f"F-({m1}, {m2}; {m12}) closed form has a pole: m1 + m2 + m12 + 2 = 0.")
    ratio = math.sin(math.pi * float(m1)) / math.sin(math.pi * float(m1 + m12))
    bracket = beta(m2 + 1, m12 + 1) + ratio * beta(m1 + 1, m12 + 1)
    return cycle_factor(m2) * cycle_factor(m1 + m12) / float(denominator) * bracket
