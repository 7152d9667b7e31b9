from .integral_cases import f_minus_integral_case, f_plus_integral_case
from .params import MonodromyParams, check_smallness, is_fractured, smallness_violations
from .residue import res, res_shifted
from .series import (
    ShellSummation,
    compositions,
    default_shell_cap,
    f_hbar,
    f_minus,
    f_minus_fractured_series,
    f_plus_n2,
)


__all__ = [
    # integral_cases
    f_minus_integral_case.__name__,
    f_plus_integral_case.__name__,
    # params
    MonodromyParams.__name__,
    check_smallness.__name__,
    is_fractured.__name__,
    smallness_violations.__name__,
    # residue
    res.__name__,
    res_shifted.__name__,
    # series
    ShellSummation.__name__,
    compositions.__name__,
    default_shell_cap.__name__,
    f_hbar.__name__,
    f_minus.__name__,
    f_minus_fractured_series.__name__,
    f_plus_n2.__name__,
]
