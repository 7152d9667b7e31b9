from dependency_injector import containers, providers

from screenlab.runtime import load_screenlab_config
from .command_registry import InMemoryCommandRegistry
from .command_service import CommandService
from .commands import default_commands


class CliContainer(containers.DeclarativeContainer):
    """DI container for the command-line package"""
    config = providers.Singleton(load_screenlab_config)
    command_registry = providers.Singleton(InMemoryCommandRegistry, command_specs=providers.Callable(default_commands))
    command_service = providers.Singleton(CommandService, command_registry=command_registry, config=config)
