from dataclasses import dataclass, field
from fractions import Fraction

from screenlab.core import WindowOverflow, format_rational, parse_rational
from .element import Coefficient, accumulate, as_coefficient

type Window = tuple[Fraction | None, Fraction | None]

UNBOUNDED: Window = (None, None)


def check_window(m: Fraction, window: Window | None, context: str) -> None:
    """
    Raises:
        WindowOverflow: m outside [min_exp, max_exp]
    """
    if window is None:
        return
    low, high = window
    if (low is not None and m < low) or (high is not None and m > high):
        raise WindowOverflow(
            f"{context}: exponent {format_rational(m)} outside the window "
            f"[{'-∞' if low is None else format_rational(low)}, {'∞' if high is None else format_rational(high)}]."
        )


def make_window(low=None, high=None) -> Window:
    return (None if low is None else parse_rational(low), None if high is None else parse_rational(high))


@dataclass(frozen=True)
class FracLaurent:
    """Finite Σ c_m z^m with rational exponents m, supported inside window."""
    coeffs: dict[Fraction, Coefficient] = field(default_factory=dict)
    window: Window = UNBOUNDED

    def __post_init__(self):
        coeffs = {}
        for m, c in self.coeffs.items():
            m = parse_rational(m)
            check_window(m, self.window, "Laurent polynomial")
            c = as_coefficient(c)
            if c != 0:
                coeffs[m] = c
        object.__setattr__(self, "coeffs", dict(sorted(coeffs.items())))

    def coefficient(self, m) -> Coefficient:
        return self.coeffs.get(parse_rational(m), Fraction(0))

    def exponents(self) -> list[Fraction]:
        return list(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "FracLaurent") -> "FracLaurent":
        coeffs = dict(self.coeffs)
        for m, c in other.coeffs.items():
            accumulate(coeffs, m, c)
        return FracLaurent(coeffs, self.window)

    def __neg__(self) -> "FracLaurent":
        return self.scale(-1)

    def __sub__(self, other: "FracLaurent") -> "FracLaurent":
        return self + (-other)

    def scale(self, c) -> "FracLaurent":
        c = as_coefficient(c)
        return FracLaurent({m: c * v for m, v in self.coeffs.items()}, self.window)

    def __mul__(self, other) -> "FracLaurent":
        if not isinstance(other, FracLaurent):
            return self.scale(other)
        coeffs: dict[Fraction, Coefficient] = {}
        for m, c in self.coeffs.items():
            for n, d in other.coeffs.items():
                accumulate(coeffs, m + n, c * d)
        return FracLaurent(coeffs, self.window)

    __rmul__ = scale

    def derivative(self) -> "FracLaurent":
        """d/dz"""
        return FracLaurent({m - 1: m * c for m, c in self.coeffs.items()}, self.window)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{format_rational(c) if isinstance(c, Fraction) else f'({c:.8g})'}·z^{format_rational(m)}"
            for m, c in self.coeffs.items()
        )

    def to_dict(self) -> dict:
        return {
            format_rational(m): {"re": float(complex(c).real), "im": float(complex(c).imag)}
            for m, c in self.coeffs.items()
        }

    @classmethod
    def monomial(cls, c, m, window: Window = UNBOUNDED) -> "FracLaurent":
        return cls({parse_rational(m): c}, window)
