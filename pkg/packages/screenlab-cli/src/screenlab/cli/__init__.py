from .command_registry import CommandRegistry, InMemoryCommandRegistry
from .command_service import CommandService
from .command_spec import CommandResult, CommandSpec, UsageError
from .commands import default_commands
from .container import CliContainer
from .runner import run


__all__ = [
    # command_registry
    CommandRegistry.__name__,
    InMemoryCommandRegistry.__name__,
    # command_service
    CommandService.__name__,
    # command_spec
    CommandResult.__name__,
    CommandSpec.__name__,
    UsageError.__name__,
    # commands
    default_commands.__name__,
    # container
    CliContainer.__name__,
    # runner
    run.__name__,
]
