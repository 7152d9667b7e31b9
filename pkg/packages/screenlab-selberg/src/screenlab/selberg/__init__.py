from .closed_forms import selberg_closed_n2, selberg_product_formula, selberg_reduce_first
from .convergence import ConvergenceCheck, require_convergent, selberg_convergent
from .integral import clear_cache, selberg
from .monte_carlo import SimplexIntegrand, selberg_monte_carlo
from .params import SelbergParams
from .quadrature import CubeIntegrand, selberg_quadrature


__all__ = [
    # closed_forms
    selberg_closed_n2.__name__,
    selberg_product_formula.__name__,
    selberg_reduce_first.__name__,
    # convergence
    ConvergenceCheck.__name__,
    require_convergent.__name__,
    selberg_convergent.__name__,
    # integral
    clear_cache.__name__,
    selberg.__name__,
    # monte_carlo
    SimplexIntegrand.__name__,
    selberg_monte_carlo.__name__,
    # params
    SelbergParams.__name__,
    # quadrature
    CubeIntegrand.__name__,
    selberg_quadrature.__name__,
]
