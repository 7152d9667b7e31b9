import argparse

from screenlab.core import EvalReport, PreconditionError, format_rational
from screenlab.monodromy import MonodromyParams, f_hbar, f_minus, f_plus_n2
from screenlab.runtime import ScreenlabConfig
from screenlab.symformula import f_minus_n2_closed, f_tilde, verify_symmetrizer
from ..arguments import add_monodromy_arguments, monodromy_params, positive_int
from ..command_spec import CommandResult, CommandSpec

EVAL_COLUMNS = ("label", "value_re", "value_im", "error_estimate", "terms_or_nodes", "converged", "method")


def params_json(p: MonodromyParams) -> dict:
    return {
        "n": p.n,
        "m": [format_rational(x) for x in p.m],
        "mm": [format_rational(x) for x in p.mm.values()],
        "hbar": list(p.hbar) if p.hbar is not None else None,
    }


def eval_row(report: EvalReport) -> dict:
    return {
        "label": report.label,
        "value_re": report.value.real,
        "value_im": report.value.imag,
        "error_estimate": report.abs_error_estimate,
        "terms_or_nodes": report.terms_or_nodes,
        "converged": report.converged,
        "method": report.method,
    }


def eval_result(report: EvalReport, **extra) -> CommandResult:
    payload = {**report.to_dict(), "label": report.label, **extra}
    return CommandResult(payload, EVAL_COLUMNS, [eval_row(report)], passed=report.converged)


def _configure_fmono(parser: argparse.ArgumentParser) -> None:
    add_monodromy_arguments(parser, hbar=True)
    parser.add_argument("--plus", action="store_true", help="F₊ instead of F₋ (n = 2 only)")
    parser.add_argument("--closed", action="store_true", help="also report the n = 2 Beta-function closed form")
    parser.add_argument("--shell-cap", type=positive_int, default=None, help="largest shell index")
    parser.add_argument("--lenient", action="store_true", help="report a capped series instead of failing")


def fmono(args: argparse.Namespace, config: ScreenlabConfig) -> CommandResult:
    p = monodromy_params(args)
    shell_cap = args.shell_cap or config.shell_cap_for(p.n)
    strict = not args.lenient
    extra = {"params": params_json(p)}
    if args.plus:
        if p.n != 2:
            raise PreconditionError(f"F+ is available for n = 2 only, got n={p.n}.")
        if p.hbar is not None:
            raise PreconditionError("--hbar applies to F- only.")
        report = f_plus_n2(p.m[0], p.m[1], p.pair(1, 2), args.tol, shell_cap, strict)
    elif p.hbar is not None:
        report = f_hbar(p, args.tol, shell_cap, strict)
    else:
        report = f_minus(p, args.tol, shell_cap, strict)
    if args.closed:
        if p.n != 2 or args.plus or p.hbar is not None:
            raise PreconditionError("--closed needs F- with n = 2 and no radii.")
        closed = f_minus_n2_closed(p.m[0], p.m[1], p.pair(1, 2))
        extra["closed_form"] = {"re": closed.real, "im": closed.imag}
    return eval_result(report, **extra)


def _configure_ftilde(parser: argparse.ArgumentParser) -> None:
    add_monodromy_arguments(parser)
    parser.add_argument("--method", choices=("quadrature", "monte_carlo"), default=None, help="force a Selberg method")
    parser.add_argument("--no-reduce", action="store_true", help="do not integrate out z_1 in closed form")


def ftilde(args: argparse.Namespace, config: ScreenlabConfig) -> CommandResult:
    p = monodromy_params(args)
    report = f_tilde(
        p,
        args.tol,
        jobs=args.jobs,
        method=args.method,
        reduce=not args.no_reduce,
        seed=args.seed,
        sample_cap=config.sample_cap,
        node_budget=config.node_budget,
    )
    return eval_result(report, params=params_json(p))


SYMCHECK_COLUMNS = ("sigma", "value_re", "value_im")


def _configure_symcheck(parser: argparse.ArgumentParser) -> None:
    add_monodromy_arguments(parser)
    parser.add_argument("--monte-carlo", action="store_true", help="allow n = 5, 6 with Monte Carlo Selberg pieces")
    parser.add_argument("--shell-cap", type=positive_int, default=None, help="shell cap of the F- series")


def symcheck(args: argparse.Namespace, config: ScreenlabConfig) -> CommandResult:
    p = monodromy_params(args)
    report = verify_symmetrizer(
        p,
        args.tol,
        monte_carlo=args.monte_carlo,
        jobs=args.jobs,
        shell_cap=args.shell_cap or config.shell_cap_for(p.n),
        seed=args.seed,
    )
    rows = [{"sigma": "lhs", "value_re": report.lhs.real, "value_im": report.lhs.imag}]
    rows += [{"sigma": str(sigma), "value_re": v.real, "value_im": v.imag} for sigma, v in report.terms.items()]
    rows.append({"sigma": "rhs", "value_re": report.rhs.real, "value_im": report.rhs.imag})
    payload = {**report.to_dict(), "params": params_json(p)}
    return CommandResult(payload, SYMCHECK_COLUMNS, rows, passed=report.passed())


COMMANDS = [
    CommandSpec("fmono", "quantum monodromy number F- (or F+ with --plus)", _configure_fmono, fmono),
    CommandSpec("ftilde", "reduced monodromy number F~- from Selberg integrals", _configure_ftilde, ftilde),
    CommandSpec("symcheck", "check F- = Ш_q F~- numerically", _configure_symcheck, symcheck),
]
