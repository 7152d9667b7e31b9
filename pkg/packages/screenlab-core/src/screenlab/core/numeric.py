"""
Exact rationals, phases and the transcendental primitives.

Exponents are always ``fractions.Fraction``; floats enter only when a phase,
a Gamma value or a residue is evaluated.
"""
import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np
from scipy import special

from .errors import Diverged, PoleError, PreconditionError

type RationalLike = Fraction | int | str

TWO_PI_I = 2j * math.pi

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse the "p/q" or "p" syntax into an exact rational.

    Args:
        value: text, int or Fraction

    Returns:
        Fraction in lowest terms

    Raises:
        PreconditionError: on decimals, floats, zero denominators or garbage
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise PreconditionError(f"Exponents must be exact rationals, got {value!r}.")
    if isinstance(value, int):
        return Fraction(value)
    match = _RATIONAL_RE.match(str(value))
    if match is None:
        raise PreconditionError(f"Not a rational 'p/q': {value!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise PreconditionError(f"Zero denominator in {value!r}")
    return Fraction(int(numerator), int(denominator or 1))


def parse_rational_list(text: str) -> list[Fraction]:
    """Comma separated rationals; the empty string gives an empty list."""
    if not text.strip():
        return []
    return [parse_rational(part) for part in text.split(",")]


def format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def is_integer(m: Fraction) -> bool:
    return Fraction(m).denominator == 1


def is_nonpositive_integer(x) -> bool:
    if isinstance(x, (Fraction, int)):
        return Fraction(x).denominator == 1 and x <= 0
    return float(x).is_integer() and float(x) <= 0


def common_denominator(values) -> int:
    return reduce(math.lcm, (Fraction(v).denominator for v in values), 1)


@dataclass(frozen=True)
class PhaseExponent:
    """The phase e^{πi·m}, stored by the representative of m in [0, 2)."""
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m) % 2)

    def __mul__(self, other: "PhaseExponent") -> "PhaseExponent":
        return PhaseExponent(self.m + other.m)

    def __pow__(self, k: int) -> "PhaseExponent":
        return PhaseExponent(self.m * k)

    def inverse(self) -> "PhaseExponent":
        return PhaseExponent(-self.m)

    def value(self) -> complex:
        return phase_eval(self)

    @classmethod
    def one(cls) -> "PhaseExponent":
        return cls(Fraction(0))


def phase_eval(p: PhaseExponent | Fraction | int) -> complex:
    """e^{πi m} from the representative of m mod 2; half-turn multiples are exact."""
    m = p.m if isinstance(p, PhaseExponent) else Fraction(p) % 2
    if (2 * m).denominator == 1:
        return (1 + 0j, 1j, -1 + 0j, -1j)[int(2 * m)]
    angle = math.pi * float(m)
    return complex(math.cos(angle), math.sin(angle))


@lru_cache(maxsize=64)
def phase_table(denominator: int) -> np.ndarray:
    """Read-only values e^{πi j/denominator} for j = 0..2·denominator−1."""
    table = np.array([phase_eval(Fraction(j, denominator)) for j in range(2 * denominator)], dtype=complex)
    table.flags.writeable = False
    return table


def cycle_factor(x: Fraction) -> complex:
    """(e^{2πix} − 1)/(2πi), the monodromy defect of z^x around one circle."""
    return (phase_eval(2 * Fraction(x)) - 1) / TWO_PI_I


def log_gamma(x) -> tuple[float, float]:
    """
    log|Γ(x)| and sign Γ(x) for real x.

    Raises:
        PoleError: at non-positive integers
    """
    if is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x}.")
    xf = float(x)
    return float(special.gammaln(xf)), float(special.gammasgn(xf))


def beta(a, b) -> complex:
    """
    Euler Beta B(a, b) = Γ(a)Γ(b)/Γ(a+b) for real a, b.

    Raises:
        PoleError: when a, b or a+b is a non-positive integer
    """
    for name, x in (("a", a), ("b", b), ("a+b", a + b)):
        if is_nonpositive_integer(x):
            raise PoleError(f"Beta({a}, {b}) has a pole: {name} = {x} is a non-positive integer.")
    af, bf = float(a), float(b)
    value = float(special.beta(af, bf))
    if not math.isfinite(value) or value == 0.0:
        sign = special.gammasgn(af) * special.gammasgn(bf) * special.gammasgn(af + bf)
        value = float(sign * math.exp(special.betaln(af, bf)))
    return complex(value)


def binomial(x, k: int):
    """Generalized binomial coefficient C(x, k); exact for Fraction/int x."""
    if k < 0:
        return 0
    exact = isinstance(x, (Fraction, int))
    result = Fraction(1) if exact else 1.0
    for j in range(k):
        result = result * (x - j) / (j + 1)
    return result


def binomial_row(x, length: int) -> np.ndarray:
    """Vector C(x, 0), ..., C(x, length−1) as floats (or complex for complex x)."""
    if length <= 0:
        return np.zeros(0)
    dtype = complex if isinstance(x, complex) else float
    j = np.arange(length - 1, dtype=float)
    ratios = (complex(x) if dtype is complex else float(x)) - j
    ratios = ratios / (j + 1)
    return np.concatenate([np.ones(1, dtype=dtype), np.cumprod(ratios)])


def finite_or_raise(value: complex, context: str) -> complex:
    if not cmath.isfinite(value):
        raise Diverged(f"{context} produced a non-finite value {value}.")
    return value
