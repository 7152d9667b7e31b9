from collections.abc import Sequence

from dependency_injector import providers

from screenlab.runtime import ScreenlabConfig
from .container import CliContainer


def run(argv: Sequence[str], config: ScreenlabConfig | None = None) -> int:
    """Runs one command line and returns its exit code; config defaults to screenlab.yaml."""
    container = CliContainer()
    if config is not None:
        container.config.override(providers.Object(config))
    return container.command_service().run(argv)
