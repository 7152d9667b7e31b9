import cmath
import logging
from dataclasses import dataclass
from typing import Literal

from .errors import Diverged

logger = logging.getLogger(__name__)

type Method = Literal["series", "closed_form", "quadrature", "monte_carlo"]


@dataclass(frozen=True)
class EvalReport:
    """Value of a numerical evaluation together with its accuracy bookkeeping."""
    value: complex
    abs_error_estimate: float
    terms_or_nodes: int
    converged: bool
    method: Method
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))
        if not cmath.isfinite(self.value):
            raise Diverged(f"{self.label or self.method} produced a non-finite value {self.value}.")
        if not self.converged:
            logger.warning(
                f"{self.label or self.method} did not converge: value={self.value:.6g}, "
                f"error estimate={self.abs_error_estimate:.3g} after {self.terms_or_nodes} terms/nodes."
            )

    def to_dict(self) -> dict:
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "error_estimate": self.abs_error_estimate,
            "terms_or_nodes": self.terms_or_nodes,
            "converged": self.converged,
            "method": self.method,
        }
