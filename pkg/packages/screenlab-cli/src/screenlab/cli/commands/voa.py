import argparse
import math
from pathlib import Path

from screenlab.core import PreconditionError
from screenlab.runtime import ScreenlabConfig
from screenlab.voa import (
    Lattice,
    VoaElement,
    screening_product_direct,
    screening_product_formula,
    trivial_level_relations,
)
from ..arguments import positive_int, rational_list, rational_points, truncation
from ..command_spec import CommandResult, CommandSpec, UsageError

LATTICE_PRESETS = {"sl2": Lattice.sl2, "sl3": Lattice.sl3}
TRIVIAL_LEVEL_TRUNCATION = 4

SCREEN_COLUMNS = ("route", "monomial", "lattice", "coeff_re", "coeff_im")
TRIVIAL_LEVEL_COLUMNS = ("relation", "alpha", "beta", "vectors", "residual")


def _configure_screen(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--lattice", type=Path, help='JSON file {"rank": r, "gram": [[...], ...]}')
    source.add_argument("--gram", type=rational_list, help="Gram matrix, rank² values row-major")
    source.add_argument("--preset", choices=sorted(LATTICE_PRESETS), help="root lattice")
    parser.add_argument("--alphas", type=rational_points, required=True, help='screening momenta, leftmost first: "1,0;0,1"')
    parser.add_argument("--lam", type=rational_list, required=True, help="weight λ of the state e^{φ_λ}")
    parser.add_argument("--route", choices=("formula", "direct", "both"), default="formula")
    parser.add_argument("--shell-cap", type=positive_int, default=None, help="shell cap of the F- series")
    parser.add_argument("--intermediate-degree", type=positive_int, default=None, help="degree kept between direct steps")


def lattice_from_args(args: argparse.Namespace) -> Lattice:
    if args.lattice is not None:
        return Lattice.load(args.lattice)
    if args.preset is not None:
        return LATTICE_PRESETS[args.preset]()
    rank = math.isqrt(len(args.gram))
    if rank == 0 or rank * rank != len(args.gram):
        raise PreconditionError(f"--gram needs rank² values, got {len(args.gram)}.")
    return Lattice(tuple(tuple(args.gram[i * rank:(i + 1) * rank]) for i in range(rank)))


def _terms(route: str, element: VoaElement) -> list[dict]:
    return [
        {
            "route": route,
            "monomial": str(u),
            "lattice": str(beta),
            "coeff_re": complex(c).real,
            "coeff_im": complex(c).imag,
        }
        for (u, beta), c in sorted(element.terms.items())
    ]


def screen(args: argparse.Namespace, config: ScreenlabConfig) -> CommandResult:
    lattice = lattice_from_args(args)
    alphas = [lattice.point(*alpha) for alpha in args.alphas]
    if not alphas:
        raise UsageError("--alphas needs at least one momentum.")
    lam = lattice.point(*args.lam)
    v = VoaElement.exponential(lattice, lam)
    degree = truncation(args, config.truncation)
    results: dict[str, VoaElement] = {}
    if args.route in ("formula", "both"):
        shell_cap = args.shell_cap or config.shell_cap_for(len(alphas))
        results["formula"] = screening_product_formula(alphas, v, degree, args.tol, shell_cap, jobs=args.jobs)
    if args.route in ("direct", "both"):
        results["direct"] = screening_product_direct(alphas, v, degree, args.intermediate_degree)
    payload = {
        "lattice": lattice.to_json(),
        "alphas": [alpha.to_json() for alpha in alphas],
        "lam": lam.to_json(),
        "truncation": degree,
        "results": {route: element.to_json() for route, element in results.items()},
    }
    if len(results) == 2:
        payload["difference"] = (results["formula"] - results["direct"]).max_abs_coeff()
    rows = [row for route, element in results.items() for row in _terms(route, element)]
    return CommandResult(payload, SCREEN_COLUMNS, rows)


def _configure_trivial_level(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lattice", choices=sorted(LATTICE_PRESETS), default="sl2", help="root lattice")


def trivial_level(args: argparse.Namespace, config: ScreenlabConfig) -> CommandResult:
    report = trivial_level_relations(args.lattice, truncation(args, TRIVIAL_LEVEL_TRUNCATION), jobs=args.jobs)
    rows = []
    for check in report.checks:
        row = check.to_dict()
        row["alpha"], row["beta"] = str(check.alpha), str(check.beta)
        rows.append(row)
    return CommandResult(report.to_dict(), TRIVIAL_LEVEL_COLUMNS, rows, passed=report.passed())


COMMANDS = [
    CommandSpec("screen", "product of screenings on a pure exponential", _configure_screen, screen),
    CommandSpec("trivial-level", "exact screening relations on a root lattice", _configure_trivial_level, trivial_level),
]
