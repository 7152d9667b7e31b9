import argparse
import math
from pathlib import Path

from screenlab.core import BraidingMatrix, PreconditionError
from screenlab.nichols import hilbert_series
from screenlab.runtime import ScreenlabConfig
from ..arguments import nonnegative_int, positive_int, rational, rational_list
from ..command_spec import CommandResult, CommandSpec, UsageError

PRESETS = {
    "a2": BraidingMatrix.a2,
    "sl21-prime": BraidingMatrix.super_sl21_prime,
    "sl21-double-prime": BraidingMatrix.super_sl21_double_prime,
}

COLUMNS = ("n", "dimension")
DEFAULT_NMAX = 6


def _configure(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--q", type=rational_list, help="exponents m_ij of q_ij = e^{πi m_ij}, rank² values row-major")
    source.add_argument("--braiding", type=Path, help='JSON file {"rank": r, "m": [[...], ...]}')
    source.add_argument("--preset", choices=sorted(PRESETS), help="named braiding at q = e^{πi t}")
    parser.add_argument("--rank", type=positive_int, default=None, help="rank, checked against --q")
    parser.add_argument("--t", type=rational, default=None, help="parameter of --preset")
    parser.add_argument("--nmax", type=nonnegative_int, default=DEFAULT_NMAX, help="largest degree")


def braiding_matrix(args: argparse.Namespace) -> BraidingMatrix:
    if args.braiding is not None:
        return BraidingMatrix.load(args.braiding)
    if args.preset is not None:
        if args.t is None:
            raise UsageError(f"--preset {args.preset} needs --t.")
        return PRESETS[args.preset](args.t)
    rank = args.rank or math.isqrt(len(args.q))
    if rank * rank != len(args.q):
        raise PreconditionError(f"--q needs rank² = {rank * rank} exponents, got {len(args.q)}.")
    return BraidingMatrix(tuple(tuple(args.q[i * rank:(i + 1) * rank]) for i in range(rank)))


def nichols(args: argparse.Namespace, config: ScreenlabConfig) -> CommandResult:
    q = braiding_matrix(args)
    dims = hilbert_series(q, args.nmax, config.factorial_cap, config.matrix_column_cap, args.jobs)
    payload = {"braiding": q.to_json(), "hilbert_series": dims, "total": sum(dims)}
    rows = [{"n": n, "dimension": d} for n, d in enumerate(dims)]
    return CommandResult(payload, COLUMNS, rows)


COMMANDS = [
    CommandSpec("nichols", "Hilbert series of a diagonal Nichols algebra", _configure, nichols),
]
