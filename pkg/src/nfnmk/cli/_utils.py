import json
from collections.abc import Iterator
from contextlib import contextmanager
from logging import getLogger
from logging.config import dictConfig
from pathlib import Path
from typing import Any

import click

from nfnmk.config.settings import ConfigRepository
from nfnmk.modules.common import NfnMkError

logger = getLogger(__name__)

CONSOLE_LEVELS = {1: "INFO", 2: "DEBUG"}


class AliasedGroup(click.Group):
    """
    Group class that allows commands to be aliased.

    http://click.pocoo.org/5/advanced/
    """

    def get_command(self, ctx: click.Context, cmd_name: str) -> click.Command | None:
        """Get a command by its name or unique prefix (`tr` -> `train`)."""
        rv = click.Group.get_command(self, ctx, cmd_name)
        if rv is not None:
            return rv
        matches = [x for x in self.list_commands(ctx) if x.startswith(cmd_name)]
        if not matches:
            return None
        if len(matches) == 1:
            return click.Group.get_command(self, ctx, matches[0])
        return ctx.fail(f"Too many matches: {', '.join(sorted(matches))}")

    def resolve_command(
        self, ctx: click.Context, args: list[str]
    ) -> tuple[str, click.Command, list[str]]:
        """Resolve a command and its arguments."""
        # always return the full command name
        _, cmd, args = super().resolve_command(ctx, args)
        if cmd is None or cmd.name is None:
            raise click.BadParameter(
                f"Command '{args[0]}' not found. Use 'nfnmk --help' for a list of commands."
            )
        return cmd.name, cmd, args


click_verbose_option = click.option(
    "-v",
    "--verbose",
    is_flag=True,
    multiple=True,
    help="Enable verbose output (-v: INFO, -vv: DEBUG).",
)


def config_logging(config: ConfigRepository, verbose: tuple[bool, ...] | None = None) -> None:
    """Configure logging; the console handler level follows the -v count."""
    logging_config = config.common.logging_config
    handlers = logging_config.get("handlers", {})

    if "file" in handlers:
        log_file_path = handlers["file"]["filename"].replace(
            "%(user_data_dir)s", config.common.user_data_dir
        )
        handlers["file"]["filename"] = log_file_path
        Path(log_file_path).parent.mkdir(parents=True, exist_ok=True)

    level = CONSOLE_LEVELS.get(min(len(verbose or ()), 2))
    if level is not None and "console" in handlers:
        handlers["console"]["level"] = level

    dictConfig(logging_config)
    if level is not None:
        logger.info(f"Setting log level to {level}")


def echo_banner(command: str, resolved: dict[str, Any]) -> None:
    """Echo the resolved run settings on stderr so every output can be reproduced."""
    click.echo(f"nfnmk {command}: {json.dumps(resolved, sort_keys=True)}", err=True)


@contextmanager
def command_errors(action: str) -> Iterator[None]:
    """Turn domain, validation and I/O failures into a ClickException (exit status 1)."""
    try:
        yield
    except click.ClickException:
        raise
    except (NfnMkError, ValueError, OSError) as e:
        logger.error(f"{action} failed: {e}")
        raise click.ClickException(str(e)) from e
    except Exception as e:
        logger.exception(f"Unexpected error during {action}")
        raise click.ClickException(f"{action} failed: {e}") from e


__all__ = [
    "AliasedGroup",
    "click_verbose_option",
    "command_errors",
    "config_logging",
    "echo_banner",
]
