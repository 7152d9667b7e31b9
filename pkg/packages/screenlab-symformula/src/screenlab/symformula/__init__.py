from .check import (
    SymmetrizerCheckReport,
    colored_params,
    position_braiding,
    relation_monodromy_sum,
    verify_symmetrizer,
)
from .closed_form import f_minus_n2_closed
from .reduced import SelbergPiece, f_tilde, selberg_pieces
from .torus import scaling_factor, torus_integral
from .vanishing import alternating_shuffle_sum, vanishing_coefficient


__all__ = [
    # check
    SymmetrizerCheckReport.__name__,
    colored_params.__name__,
    position_braiding.__name__,
    relation_monodromy_sum.__name__,
    verify_symmetrizer.__name__,
    # closed_form
    f_minus_n2_closed.__name__,
    # reduced
    SelbergPiece.__name__,
    f_tilde.__name__,
    selberg_pieces.__name__,
    # torus
    scaling_factor.__name__,
    torus_integral.__name__,
    # vanishing
    alternating_shuffle_sum.__name__,
    vanishing_coefficient.__name__,
]
