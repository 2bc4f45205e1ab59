"""Training command for both model kinds.

実験記述ファイル (JSON) を読み、`kind` に応じて NFN-MK か MLP ベースラインを学習する。
CLI フラグはファイルの値を上書きする。
"""

import json
from collections.abc import Callable
from logging import getLogger
from pathlib import Path
from typing import Any

import click
from injector import Injector

from nfnmk.cli._progress import EpochProgressManager
from nfnmk.cli._utils import click_verbose_option, command_errors, config_logging, echo_banner
from nfnmk.config.settings import ConfigRepository
from nfnmk.dependencies.container import create_injector
from nfnmk.modules.bench.usecases import GenerateDatasetUseCase, LoadDatasetUseCase
from nfnmk.modules.common import DataFormatError, Dataset, TrainingReport
from nfnmk.modules.mlp.config import MlpExperimentConfig
from nfnmk.modules.mlp.usecases import TrainMlpUseCase
from nfnmk.modules.nfn.domain import PipelineConfig
from nfnmk.modules.nfn.usecases import RunPipelineUseCase

logger = getLogger(__name__)

MODEL_KINDS = ("nfn", "mlp")

Runner = Callable[[Dataset, Callable[[int, float], None]], TrainingReport]


def read_experiment(path: Path | None) -> dict[str, Any]:
    """Load the experiment JSON; a relative dataset path is taken from the file's directory."""
    if path is None:
        return {}
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DataFormatError(f"{path}: line {e.lineno}: {e.msg}") from e
    if not isinstance(raw, dict):
        raise DataFormatError(f"{path}: experiment description must be a JSON object")
    dataset = raw.get("dataset")
    if isinstance(dataset, str) and not Path(dataset).is_absolute():
        raw["dataset"] = str(path.parent / dataset)
    return raw


def apply_overrides(
    raw: dict[str, Any],
    kind: str,
    seed: int | None,
    epochs: int | None,
    learning_rate: float | None,
    som_epochs: int | None,
) -> dict[str, Any]:
    """Layer CLI flags over the experiment file values."""
    merged = {k: (dict(v) if isinstance(v, dict) else v) for k, v in raw.items()}
    train = merged.setdefault("train", {})
    if seed is not None:
        train["shuffle_seed"] = seed
        merged["som_seed" if kind == "nfn" else "init_seed"] = seed
    if epochs is not None:
        train["epochs"] = epochs
    if learning_rate is not None:
        train["learning_rate"] = learning_rate
    if som_epochs is not None:
        if kind == "nfn":
            merged.setdefault("som", {})["epochs"] = som_epochs
        else:
            logger.warning("--som-epochs has no effect on an MLP run")
    if not train:
        del merged["train"]
    return merged


def _dataset(injector: Injector, path: str | None) -> Dataset:
    if path is None:
        logger.info("No dataset given, training on the default Mexican-hat grid")
        return injector.get(GenerateDatasetUseCase).execute()
    return injector.get(LoadDatasetUseCase).execute(Path(path))


def _trainer(
    injector: Injector, kind: str, overrides: dict[str, Any], model_out: Path | None
) -> tuple[PipelineConfig | MlpExperimentConfig, Runner]:
    """Resolved settings of the run and a function that performs it."""
    if kind == "nfn":
        pipeline = injector.get(RunPipelineUseCase)
        nfn_cfg = pipeline.resolve(overrides)
        return nfn_cfg, lambda data, progress: pipeline.execute(
            nfn_cfg, data, model_out, progress
        )[1]
    baseline = injector.get(TrainMlpUseCase)
    mlp_cfg = baseline.resolve(overrides)
    return mlp_cfg, lambda data, progress: baseline.execute(mlp_cfg, data, model_out, progress)[1]


def _write_report(report: TrainingReport, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2) + "\n")
    logger.info(f"Report written to {path}")


@click.command()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Experiment description (JSON)",
)
@click.option(
    "--kind", type=click.Choice(MODEL_KINDS), default=None, help="Override the file's model kind"
)
@click.option("--model-out", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--report-out", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--seed", type=int, default=None, help="Shuffle and SOM/initialisation seed")
@click.option("--epochs", type=int, default=None, help="Weight-training epochs")
@click.option("--learning-rate", type=float, default=None)
@click.option("--som-epochs", type=int, default=None, help="Vertex SOM epochs (nfn only)")
@click_verbose_option
def train(
    config_path: Path | None,
    kind: str | None,
    model_out: Path | None,
    report_out: Path | None,
    seed: int | None,
    epochs: int | None,
    learning_rate: float | None,
    som_epochs: int | None,
    verbose: tuple[bool, ...],
) -> None:
    """Train a model and write its model and report files.

    Examples:
        nfnmk train --config cfg.json --model-out m.json --report-out r.json
        nfnmk train --kind mlp --seed 3 --model-out nn.json
    """
    config = ConfigRepository.create()
    config_logging(config, verbose)

    with command_errors("train"):
        raw = read_experiment(config_path)
        file_kind = raw.pop("kind", "nfn")
        run_kind = kind or str(file_kind)
        if run_kind not in MODEL_KINDS:
            raise DataFormatError(f"unknown model kind {run_kind!r}")
        overrides = apply_overrides(raw, run_kind, seed, epochs, learning_rate, som_epochs)

        injector = create_injector(config)
        cfg, run = _trainer(injector, run_kind, overrides, model_out)
        echo_banner("train", {"kind": run_kind, **cfg.model_dump(mode="json")})

        data = _dataset(injector, cfg.dataset)
        with EpochProgressManager(cfg.train.epochs, desc=run_kind.upper()) as progress:
            report = run(data, progress.finish_epoch)

        if report_out is not None:
            _write_report(report, report_out)

    click.echo(f"Final MQE: {report.final_mqe:.4f}")
