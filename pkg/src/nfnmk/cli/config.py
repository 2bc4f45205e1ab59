"""Configuration management commands."""

from pathlib import Path

import click
import tomli_w

from nfnmk.cli._utils import AliasedGroup
from nfnmk.config.settings import CONFIG_PATHS, ENV_PREFIX, ConfigRepository

SECTIONS = ("common", "nfn", "mlp", "bench")


@click.group(cls=AliasedGroup)
def config() -> None:
    """Configuration management commands."""
    pass


@config.command()
@click.option("--section", type=click.Choice(SECTIONS), default=None, help="Show one section only")
def show(section: str | None) -> None:
    """Show the merged configuration as JSON."""
    repo = ConfigRepository.create()

    if section is None:
        click.echo(repo.model_dump_json(indent=2))
    else:
        click.echo(getattr(repo, section).model_dump_json(indent=2))


@config.command()
@click.option(
    "--path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("./settings.toml"),
    help="Path to generate the configuration file (default: ./settings.toml)",
)
@click.option(
    "--force",
    is_flag=True,
    help="Overwrite existing configuration file",
)
def init(path: Path, force: bool) -> None:
    """Write the module defaults (nfn, mlp, bench) as a TOML settings file."""
    if path.exists() and not force:
        click.echo(f"Configuration file already exists: {path}", err=True)
        click.echo("Use --force to overwrite.", err=True)
        return

    defaults = ConfigRepository().model_dump(mode="json", exclude={"common"})

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        tomli_w.dump(defaults, f)

    click.echo(f"Generated default configuration file: {path}")


@config.command()
@click.option(
    "--config-file",
    type=click.Path(exists=True, dir_okay=False),
    help="Path to configuration file to validate",
)
def validate(config_file: str | None) -> None:
    """Validate a settings file, or the merged configuration when none is given."""
    target = f"Configuration file {config_file}" if config_file else "Current configuration"
    try:
        if config_file:
            ConfigRepository.create(paths=[config_file])
        else:
            ConfigRepository.create()
    except ValueError as e:
        click.echo(f"{target} is invalid: {e}", err=True)
        raise click.Abort() from e

    click.echo(f"{target} is valid.")


@config.command()
def paths() -> None:
    """Show configuration file search paths."""
    click.echo("Configuration files are searched in the following order:")
    for i, path in enumerate(CONFIG_PATHS, 1):
        click.echo(f"{i}. {path}")
    click.echo(f"Environment variables {ENV_PREFIX}<SECTION>__<FIELD> override the files.")
