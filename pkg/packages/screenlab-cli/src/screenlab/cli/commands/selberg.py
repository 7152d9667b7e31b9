import argparse

from screenlab.core import format_rational
from screenlab.runtime import ScreenlabConfig
from screenlab.selberg import SelbergParams, selberg, selberg_product_formula
from ..arguments import positive_int, rational, rational_list
from ..command_spec import CommandResult, CommandSpec, UsageError
from .monodromy import eval_result


def _configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=rational_list, default=None, help="m_1,...,m_n")
    parser.add_argument("--mbar", type=rational_list, default=[], help="m̄_1,...,m̄_n, zeros when omitted")
    parser.add_argument("--mm", type=rational_list, default=[], help="m_12,m_13,...,m_23,... row-major")
    parser.add_argument("--method", choices=("quadrature", "monte_carlo"), default=None, help="force a method")
    product = parser.add_argument_group("classical Selberg integral")
    product.add_argument("--k", type=positive_int, default=None, help="dimension; m_i = a−1, m̄_i = b−1, m_ij = 2c")
    product.add_argument("--a", type=rational, default=None)
    product.add_argument("--b", type=rational, default=None)
    product.add_argument("--c", type=rational, default=None)


def _params(args: argparse.Namespace) -> tuple[SelbergParams, complex | None]:
    if args.k is None:
        if args.m is None:
            raise UsageError("selberg needs --m, or --k with --a --b --c.")
        return SelbergParams.from_lists(args.m, args.mbar, args.mm), None
    if None in (args.a, args.b, args.c) or args.m is not None:
        raise UsageError("--k needs --a, --b and --c, and excludes --m.")
    p = SelbergParams.uniform(args.k, args.a - 1, args.b - 1, 2 * args.c)
    return p, selberg_product_formula(args.a, args.b, args.c, args.k)


def run_selberg(args: argparse.Namespace, config: ScreenlabConfig) -> CommandResult:
    p, product = _params(args)
    report = selberg(
        p,
        args.tol,
        method=args.method,
        seed=args.seed,
        sample_cap=config.sample_cap,
        node_budget=config.node_budget,
    )
    extra = {
        "params": {
            "n": p.n,
            "m": [format_rational(x) for x in p.m],
            "mbar": [format_rational(x) for x in p.mbar],
            "mm": [format_rational(x) for x in p.mm.values()],
        }
    }
    result = eval_result(report, **extra)
    if product is not None:
        relative = abs(report.value - product) / abs(product)
        result.payload["product_formula"] = {"re": product.real, "im": product.imag}
        result.payload["relative_error"] = relative
    return result


COMMANDS = [
    CommandSpec("selberg", "generalized Selberg integral over the ordered simplex", _configure, run_selberg),
]
