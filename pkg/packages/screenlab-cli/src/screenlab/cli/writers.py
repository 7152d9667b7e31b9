import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Literal

from .command_spec import CommandResult

logger = logging.getLogger(__name__)

type OutputFormat = Literal["json", "csv"]

SCHEMA_VERSION = 1


def render_json(command: str, result: CommandResult) -> str:
    document = {"schema": SCHEMA_VERSION, "command": command, "passed": result.passed, **result.payload}
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_csv(result: CommandResult) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(result.columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(result.rows)
    return buffer.getvalue()


def write_result(command: str, result: CommandResult, output_format: OutputFormat, out: Path | None = None) -> None:
    """Render the result and write it to out, or to stdout."""
    text = render_json(command, result) if output_format == "json" else render_csv(result)
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8", newline="")
    logger.info(f"Wrote {output_format} output of '{command}' to {out}.")
