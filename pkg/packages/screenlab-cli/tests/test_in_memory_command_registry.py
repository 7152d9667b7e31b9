import pytest

from screenlab.cli import CommandResult, CommandSpec, CommandRegistry, InMemoryCommandRegistry, default_commands


def command(name: str) -> CommandSpec:
    return CommandSpec(name, f"{name} help", lambda parser: None, lambda args, config: CommandResult({}))


@pytest.mark.unit
class TestInMemoryCommandRegistry:

    def test_insert(self):
        """Test an inserted command can be read back"""
        registry = InMemoryCommandRegistry()
        spec = command("fmono")
        registry.insert(spec)
        assert registry.get_command("fmono") is spec

    def test_duplicate_insert_not_allowed(self):
        """Test a second command with the same name is refused"""
        registry = InMemoryCommandRegistry([command("fmono")])
        with pytest.raises(ValueError, match="already exists"):
            registry.insert(command("fmono"))

    def test_get_missing_command(self):
        """Test an unknown name gives None"""
        assert InMemoryCommandRegistry().get_command("fmono") is None

    def test_list_commands(self):
        """Test commands are listed in insertion order"""
        c1, c2 = command("nichols"), command("fmono")
        registry = InMemoryCommandRegistry([c1, c2])
        assert registry.list_commands() == [c1, c2]

    def test_protocol(self):
        """Test the in-memory registry satisfies the registry protocol"""
        assert isinstance(InMemoryCommandRegistry(), CommandRegistry)

    def test_default_commands(self):
        """Test the default command set"""
        registry = InMemoryCommandRegistry(default_commands())
        assert [c.name for c in registry.list_commands()] == [
            "fmono", "ftilde", "symcheck", "selberg", "nichols", "screen", "trivial-level", "paper-table",
        ]
