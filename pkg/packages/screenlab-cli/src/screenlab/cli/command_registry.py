from typing import Protocol, runtime_checkable

from .command_spec import CommandSpec


@runtime_checkable
class CommandRegistry(Protocol):
    """Command registry"""

    def insert(self, command_spec: CommandSpec) -> None: ...
    def get_command(self, name: str) -> CommandSpec | None: ...
    def list_commands(self) -> list[CommandSpec]: ...


class InMemoryCommandRegistry:
    """In-memory command registry, in insertion order"""

    def __init__(self, command_specs: list[CommandSpec] | None = None):
        self._commands: dict[str, CommandSpec] = {}
        for command_spec in command_specs or []:
            self.insert(command_spec)

    def insert(self, command_spec: CommandSpec) -> None:
        if command_spec.name in self._commands:
            raise ValueError(f"Command '{command_spec.name}' already exists.")
        self._commands[command_spec.name] = command_spec

    def get_command(self, name: str) -> CommandSpec | None:
        return self._commands.get(name, None)

    def list_commands(self) -> list[CommandSpec]:
        return list(self._commands.values())
