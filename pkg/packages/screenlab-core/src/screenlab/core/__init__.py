from .braiding import BraidingMatrix
from .combinat import (
    Permutation,
    all_permutations,
    braiding_factor,
    braiding_factor_closed,
    inversions,
    q_factorial,
    quantum_symmetrizer_coefficients,
    shuffles,
    symmetrizer_sum,
)
from .errors import (
    Budget,
    Diverged,
    FactorialLimit,
    IllConditioned,
    NonConvergenceError,
    NonConvergent,
    PoleError,
    PreconditionError,
    ScreenlabError,
    ShellCap,
    SizeLimit,
    SmallnessError,
    WindowOverflow,
)
from .numeric import (
    PhaseExponent,
    beta,
    binomial,
    binomial_row,
    common_denominator,
    cycle_factor,
    format_rational,
    is_integer,
    log_gamma,
    parse_rational,
    parse_rational_list,
    phase_eval,
    phase_table,
)
from .parallel import ordered_map
from .reports import EvalReport


__all__ = [
    # braiding
    BraidingMatrix.__name__,
    # combinat
    Permutation.__name__,
    all_permutations.__name__,
    braiding_factor.__name__,
    braiding_factor_closed.__name__,
    inversions.__name__,
    q_factorial.__name__,
    quantum_symmetrizer_coefficients.__name__,
    shuffles.__name__,
    symmetrizer_sum.__name__,
    # errors
    Budget.__name__,
    Diverged.__name__,
    FactorialLimit.__name__,
    IllConditioned.__name__,
    NonConvergenceError.__name__,
    NonConvergent.__name__,
    PoleError.__name__,
    PreconditionError.__name__,
    ScreenlabError.__name__,
    ShellCap.__name__,
    SizeLimit.__name__,
    SmallnessError.__name__,
    WindowOverflow.__name__,
    # numeric
    PhaseExponent.__name__,
    beta.__name__,
    binomial.__name__,
    binomial_row.__name__,
    common_denominator.__name__,
    cycle_factor.__name__,
    format_rational.__name__,
    is_integer.__name__,
    log_gamma.__name__,
    parse_rational.__name__,
    parse_rational_list.__name__,
    phase_eval.__name__,
    phase_table.__name__,
    # parallel
    ordered_map.__name__,
    # reports
    EvalReport.__name__,
]
