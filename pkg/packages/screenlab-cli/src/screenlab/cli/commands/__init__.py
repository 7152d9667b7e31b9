from ..command_spec import CommandSpec
from . import monodromy, nichols, paper_table, selberg, voa


def default_commands() -> list[CommandSpec]:
    """Every command in the order of `screenlab --help`."""
    return [*monodromy.COMMANDS, *selberg.COMMANDS, *nichols.COMMANDS, *voa.COMMANDS, *paper_table.COMMANDS]


__all__ = [
    default_commands.__name__,
]
