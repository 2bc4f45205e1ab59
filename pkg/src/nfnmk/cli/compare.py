"""Model comparison command."""

from logging import getLogger
from pathlib import Path

import click
from table2ascii import Alignment, PresetStyle, table2ascii

from nfnmk.cli._utils import click_verbose_option, command_errors, config_logging
from nfnmk.config.settings import ConfigRepository
from nfnmk.dependencies.container import create_injector
from nfnmk.modules.bench.domain import COMPARISON_HEADER, Comparison
from nfnmk.modules.bench.usecases import CompareModelsUseCase

logger = getLogger(__name__)


class TableFormatter:
    """比較表のテキスト表示（table2ascii使用）"""

    def format(self, comparison: Comparison) -> str:
        """比較表を罫線付きの表に整形

        Args:
            comparison: 比較表

        Returns:
            モデル名は左寄せ、数値列は右寄せの表
        """
        return table2ascii(
            header=COMPARISON_HEADER,
            body=[row.cells() for row in comparison.rows],
            style=PresetStyle.ascii_box,
            alignments=[Alignment.LEFT] + [Alignment.RIGHT] * (len(COMPARISON_HEADER) - 1),
        )


@click.command()
@click.argument("report_paths", nargs=-1, required=True, type=click.Path(path_type=Path))
@click.option(
    "--csv",
    "csv_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write the table as CSV",
)
@click.option(
    "--published/--no-published",
    default=None,
    help="List the published NFN-MK and NN rows as well",
)
@click_verbose_option
def compare(
    report_paths: tuple[Path, ...],
    csv_path: Path | None,
    published: bool | None,
    verbose: tuple[bool, ...],
) -> None:
    """Print the comparison table of trained models and the reference models.

    Examples:
        nfnmk compare nfn_report.json nn_report.json --csv table.csv
    """
    options = {} if published is None else {"bench": {"include_published": published}}
    config = ConfigRepository.create(options)
    config_logging(config, verbose)

    with command_errors("compare"):
        use_case = create_injector(config).get(CompareModelsUseCase)
        comparison = use_case.execute(list(report_paths), csv_path)

    click.echo(TableFormatter().format(comparison))
    if comparison.diagnostics:
        for message in comparison.diagnostics:
            click.echo(message, err=True)
        raise click.ClickException(f"{len(comparison.diagnostics)} report(s) rejected")
