"""
Argument types and flag groups shared by the commands.

Every exponent flag takes exact rationals in the "p/q" syntax. A list whose
first entry is negative has to be attached with '=', e.g. --m=-1/3,2/3.
"""
import argparse
from fractions import Fraction
from pathlib import Path

from screenlab.core import PreconditionError, parse_rational, parse_rational_list
from screenlab.monodromy import MonodromyParams
from screenlab.runtime import ScreenlabConfig


def rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except PreconditionError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def rational_list(text: str) -> list[Fraction]:
    try:
        return parse_rational_list(text)
    except PreconditionError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def rational_points(text: str) -> list[list[Fraction]]:
    """Semicolon separated points, each a comma separated list: "1,0;0,1"."""
    return [rational_list(part) for part in text.split(";") if part.strip()]


def float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Not a comma separated list of numbers: {text!r}") from e


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Not a number: {text!r}") from e
    if not value > 0:
        raise argparse.ArgumentTypeError(f"Expected a positive number, got {text}.")
    return value


def _bounded_int(text: str, lower: int) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Not an integer: {text!r}") from e
    if value < lower:
        raise argparse.ArgumentTypeError(f"Expected an integer >= {lower}, got {value}.")
    return value


def positive_int(text: str) -> int:
    return _bounded_int(text, 1)


def nonnegative_int(text: str) -> int:
    return _bounded_int(text, 0)


def common_parser(config: ScreenlabConfig) -> argparse.ArgumentParser:
    """Flags every command accepts, defaulted from the loaded configuration."""
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("common")
    group.add_argument("--tol", type=positive_float, default=config.tolerance, help="absolute tolerance")
    group.add_argument("--trunc", type=nonnegative_int, default=None, help="VOA degree truncation")
    group.add_argument("--seed", type=nonnegative_int, default=config.seed, help="Monte Carlo seed")
    group.add_argument("--jobs", type=positive_int, default=config.jobs, help="worker count (env SCREENLAB_JOBS)")
    group.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    group.add_argument("--out", type=Path, default=None, help="output file, stdout when omitted")
    return parser


def add_monodromy_arguments(parser: argparse.ArgumentParser, hbar: bool = False) -> None:
    parser.add_argument("--m", type=rational_list, required=True, help="m_1,...,m_n")
    parser.add_argument("--mm", type=rational_list, default=[], help="m_12,m_13,...,m_23,... row-major")
    parser.add_argument("--n", type=positive_int, default=None, help="number of variables, checked against --m")
    if hbar:
        parser.add_argument("--hbar", type=float_list, default=None, help="radii ħ_1,...,ħ_n")


def monodromy_params(args: argparse.Namespace) -> MonodromyParams:
    if args.n is not None and args.n != len(args.m):
        raise PreconditionError(f"--n {args.n} does not match the {len(args.m)} values of --m.")
    return MonodromyParams.from_lists(args.m, args.mm, getattr(args, "hbar", None))


def truncation(args: argparse.Namespace, default: int) -> int:
    return default if args.trunc is None else args.trunc
