"""Evaluation and partition export commands."""

import json
from logging import getLogger
from pathlib import Path

import click

from nfnmk.cli._utils import click_verbose_option, command_errors, config_logging
from nfnmk.config.settings import ConfigRepository
from nfnmk.dependencies.container import create_injector
from nfnmk.modules.bench.usecases import LoadDatasetUseCase, WritePredictionsUseCase
from nfnmk.modules.common import DataFormatError, EvaluationResult
from nfnmk.modules.mlp.usecases import EvaluateMlpUseCase
from nfnmk.modules.nfn.usecases import EvaluateNfnUseCase, ExportPartitionsUseCase

logger = getLogger(__name__)


def model_kind(path: Path) -> str:
    """The `kind` discriminator of a model file."""
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DataFormatError(f"{path}: line {e.lineno}: {e.msg}") from e
    kind = raw.get("kind") if isinstance(raw, dict) else None
    if kind not in ("nfn", "mlp"):
        raise DataFormatError(f"{path}: unknown model kind {kind!r}")
    return str(kind)


@click.command(name="eval")
@click.option(
    "--model",
    "model_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option(
    "--data",
    "data_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Prediction CSV (x1,x2,y_true,y_pred)",
)
@click_verbose_option
def evaluate(
    model_path: Path, data_path: Path, out: Path | None, verbose: tuple[bool, ...]
) -> None:
    """Evaluate a trained model on a dataset and print its MQE.

    Rows outside the model domain are reported one by one and make the command fail after
    the remaining rows have been written.
    """
    config = ConfigRepository.create()
    config_logging(config, verbose)

    with command_errors("eval"):
        injector = create_injector(config)
        kind = model_kind(model_path)
        data = injector.get(LoadDatasetUseCase).execute(data_path)
        result: EvaluationResult
        if kind == "nfn":
            result = injector.get(EvaluateNfnUseCase).execute(model_path, data)
        else:
            result = injector.get(EvaluateMlpUseCase).execute(model_path, data)
        if out is not None:
            injector.get(WritePredictionsUseCase).execute(data, result.predictions, out)

    for error in result.errors:
        click.echo(f"row {error.row}: {error.message}", err=True)
    if result.mqe is not None:
        click.echo(f"MQE: {result.mqe:.4f}")
    if result.errors:
        raise click.ClickException(
            f"{len(result.errors)} of {len(data)} rows could not be evaluated"
        )


@click.command()
@click.option(
    "--model",
    "model_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option(
    "--partitions-out",
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
    help="CSV of triangle breakpoints (input,label,left,vertex,right)",
)
@click_verbose_option
def export(model_path: Path, partitions_out: Path, verbose: tuple[bool, ...]) -> None:
    """Write the triangle breakpoints of a neuro-fuzzy model for plotting."""
    config = ConfigRepository.create()
    config_logging(config, verbose)

    with command_errors("export"):
        kind = model_kind(model_path)
        if kind != "nfn":
            raise DataFormatError(f"{model_path}: export needs a neuro-fuzzy model, got {kind!r}")
        rows = create_injector(config).get(ExportPartitionsUseCase).execute(
            model_path, partitions_out
        )

    click.echo(f"{rows} curves written to {partitions_out}")
