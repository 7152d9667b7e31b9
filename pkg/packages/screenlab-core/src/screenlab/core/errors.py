class ScreenlabError(Exception):
    """Base class of every screenlab error."""


class PreconditionError(ScreenlabError, ValueError):
    """An operation was called outside its domain."""


class SmallnessError(PreconditionError):
    """The m_ij violate smallness on some index subset."""

    def __init__(self, subset: tuple[int, ...], total, bound: int):
        self.subset = subset
        self.total = total
        self.bound = bound
        super().__init__(
            f"Smallness fails on subset {subset}: sum of m_ij = {total} is not > {bound}."
        )


class PoleError(ScreenlabError, ArithmeticError):
    """Evaluation hit a pole (Gamma/Beta argument or zero denominator)."""


class SizeLimit(ScreenlabError, ValueError):
    """Requested object exceeds a configured size cap."""


class FactorialLimit(SizeLimit):
    """n exceeds the cap for full symmetric-group enumeration."""


class IllConditioned(ScreenlabError, ArithmeticError):
    """Numeric rank cannot be decided reliably."""


class WindowOverflow(ScreenlabError, ValueError):
    """A z-exponent left the requested window."""


class NonConvergenceError(ScreenlabError, ArithmeticError):
    """Base class of the convergence failures."""


class Diverged(NonConvergenceError):
    """Series shells are growing, or a value became non-finite."""


class ShellCap(NonConvergenceError):
    """Shell cap reached before the partial sums stabilized."""


class NonConvergent(NonConvergenceError):
    """An infinite tail was requested without a truncation."""


class Budget(NonConvergenceError):
    """Quadrature node or Monte Carlo sample budget exhausted."""
