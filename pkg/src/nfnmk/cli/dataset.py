"""Dataset generation command."""

from logging import getLogger
from pathlib import Path

import click

from nfnmk.cli._utils import click_verbose_option, command_errors, config_logging
from nfnmk.config.settings import ConfigRepository
from nfnmk.dependencies.container import create_injector
from nfnmk.modules.bench.usecases import GenerateDatasetUseCase

logger = getLogger(__name__)


@click.command(name="gen-data")
@click.option("--n", "n_per_axis", type=int, default=None, help="Grid points per axis (default 15)")
@click.option("--min", "domain_min", type=float, default=None, help="Lower grid bound")
@click.option("--max", "domain_max", type=float, default=None, help="Upper grid bound")
@click.option(
    "--out",
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
    help="Dataset CSV to write",
)
@click_verbose_option
def gen_data(
    n_per_axis: int | None,
    domain_min: float | None,
    domain_max: float | None,
    out: Path,
    verbose: tuple[bool, ...],
) -> None:
    """Write the Mexican-hat grid dataset as x1,x2,y CSV.

    Examples:
        nfnmk gen-data --n 15 --min -10 --max 10 --out data.csv
    """
    config = ConfigRepository.create()
    config_logging(config, verbose)

    lo, hi = config.bench.domain
    domain = (lo if domain_min is None else domain_min, hi if domain_max is None else domain_max)
    with command_errors("gen-data"):
        use_case = create_injector(config).get(GenerateDatasetUseCase)
        data = use_case.execute(n_per_axis, domain, out)

    click.echo(f"{len(data)} rows written to {out}")
