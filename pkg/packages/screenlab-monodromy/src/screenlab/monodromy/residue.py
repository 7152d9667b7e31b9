from fractions import Fraction

import numpy as np

from screenlab.core import PreconditionError, cycle_factor, is_integer


def res(m: Fraction, hbar: float = 1.0) -> complex:
    """
    Formal residue of z^m along the lifted circle of radius ħ.

    0 for m ∈ ℤ∖{−1}, 1 for m = −1, else ħ^{m+1}(e^{2πi(m+1)} − 1)/(2πi(m+1)).
    """
    if hbar <= 0:
        raise PreconditionError(f"Radius must be positive, got {hbar}.")
    m = Fraction(m)
    if is_integer(m):
        return 1 + 0j if m == -1 else 0j
    return hbar ** float(m + 1) * cycle_factor(m) / float(m + 1)


def res_shifted(base: Fraction, shifts: np.ndarray, log_hbar: float = 0.0) -> np.ndarray:
    """
    res(base + d, ħ) for an integer array d, given log ħ.

    The phase of z^{base+d} does not depend on d, so only the denominator and
    the radius power vary along the array.
    """
    d = np.asarray(shifts)
    if is_integer(base):
        return (d == -1 - int(base)).astype(complex)
    exponent = float(base + 1) + d
    return cycle_factor(base) * np.exp(exponent * log_hbar) / exponent
