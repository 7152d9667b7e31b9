import argparse
import logging
from collections.abc import Sequence

from screenlab.core import IllConditioned, NonConvergenceError, ScreenlabError
from screenlab.runtime import ScreenlabConfig
from .arguments import common_parser
from .command_registry import CommandRegistry
from .command_spec import CommandResult, UsageError
from .writers import write_result

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PRECONDITION = 2
EXIT_NON_CONVERGENCE = 3
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class CommandService:
    """Parses the command line and runs registered commands"""

    def __init__(self, command_registry: CommandRegistry, config: ScreenlabConfig):
        self._command_registry = command_registry
        self._config = config

    def build_parser(self) -> argparse.ArgumentParser:
        """Builds the parser with one subcommand per registered command."""
        parser = _Parser(prog="screenlab", description="Quantum monodromy numbers, Selberg integrals, Nichols algebras and screenings.")
        subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
        common = common_parser(self._config)
        for command in self._command_registry.list_commands():
            command.configure(subparsers.add_parser(command.name, help=command.help, parents=[common]))
        return parser

    def execute(self, argv: Sequence[str]) -> tuple[argparse.Namespace, CommandResult]:
        """Parses argv and runs the command, letting errors through."""
        args = self.build_parser().parse_args(list(argv))
        command = self._command_registry.get_command(args.command)
        logger.info(f"Running '{command.name}'.")
        return args, command.handler(args, self._config)

    def run(self, argv: Sequence[str]) -> int:
        """Runs a command line and maps the outcome to an exit code."""
        try:
            args, result = self.execute(argv)
            write_result(args.command, result, args.format, args.out)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_OK
        except (UsageError, OSError) as e:
            logger.error(str(e))
            return EXIT_USAGE
        except (NonConvergenceError, IllConditioned) as e:
            logger.error(f"{type(e).__name__}: {e}")
            return EXIT_NON_CONVERGENCE
        except ScreenlabError as e:
            logger.error(f"{type(e).__name__}: {e}")
            return EXIT_PRECONDITION
        if not result.passed:
            logger.warning(f"'{args.command}' finished with failing checks.")
            return EXIT_CHECK_FAILED
        logger.info(f"'{args.command}' finished.")
        return EXIT_OK
