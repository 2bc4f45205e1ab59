"""NFN-MK use cases: the two-phase training pipeline, evaluation and export.

Phase S1 trains one SOM per input on that input's coordinates and redraws the partitions around
the learned prototypes; phase S2 fits the segment weights by LMS with the partitions frozen.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from injector import inject

from nfnmk.modules.common import (
    Dataset,
    DimensionMismatchError,
    EvaluationResult,
    ModelSummary,
    OpCounts,
    OpLedger,
    target_range,
)

from .config import NfnConfig
from .domain import NfnModelRepository, PartitionExporter, PipelineConfig, PipelineReport
from .membership import rebuild_partition
from .neuron import NfnModel, nfn_eval, sample_point, train_weights, training_mqe
from .som import SomState, som_init, som_train

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, float], None]


@dataclass(frozen=True)
class VertexPhaseResult:
    """Outcome of phase S1."""

    initial: list[SomState]
    learned: list[SomState]
    model: NfnModel
    warnings: list[str]


def learn_vertices(cfg: PipelineConfig, data: Dataset) -> VertexPhaseResult:
    """Phase S1: SOM per input, then rebuild the partitions. Weights stay at zero."""
    data.require_non_empty()
    n_inputs = len(data[0].x)
    if len(cfg.domains) != n_inputs:
        raise DimensionMismatchError(
            f"config has {len(cfg.domains)} domains, dataset has {n_inputs} inputs"
        )

    initial = [som_init(lo, hi) for lo, hi in cfg.domains]
    learned = [
        som_train(state, data.column(i), cfg.som, cfg.som_seed + i)
        for i, state in enumerate(initial)
    ]

    warnings: list[str] = []
    for i, state in enumerate(learned):
        for a, b in state.coincident():
            message = f"input {i + 1}: prototypes {a} and {b} coincide at {state.prototypes[a]}"
            logger.warning(message)
            warnings.append(message)
        if state.crossed:
            logger.info(f"input {i + 1}: SOM prototypes crossed and were re-sorted")

    partitions = [
        rebuild_partition(state.prototypes, lo, hi)
        for state, (lo, hi) in zip(learned, cfg.domains, strict=True)
    ]
    return VertexPhaseResult(initial, learned, NfnModel.zeros(partitions), warnings)


def run_pipeline(
    cfg: PipelineConfig, data: Dataset, progress: ProgressCallback | None = None
) -> tuple[NfnModel, PipelineReport]:
    """Run phase S1 then phase S2 once each and report every intermediate artifact.

    Raises:
        EmptyDatasetError, DimensionMismatchError, OutOfDomainError: From the phases.
    """
    logger.info(f"Phase S1: SOM over {len(cfg.domains)} inputs, {cfg.som.epochs} epochs")
    phase1 = learn_vertices(cfg, data)

    logger.info(f"Phase S2: LMS over {len(data)} samples, {cfg.train.epochs} epochs")
    ledger = OpLedger()
    epoch_mqe: list[float] = []
    epoch_ops: list[int] = []

    def record(epoch: int, model: NfnModel) -> None:
        # epoch_ops is cumulative over the whole S2 run
        value = training_mqe(model, data)
        epoch_mqe.append(value)
        epoch_ops.append(ledger.total)
        logger.debug(f"epoch {epoch + 1}: MQE={value:.6f}")
        if progress is not None:
            progress(epoch, value)

    model = train_weights(phase1.model, data, cfg.train, on_epoch=record, ledger=ledger)

    eval_ledger = OpLedger()
    nfn_eval(model, sample_point(model), eval_ledger)

    report = PipelineReport(
        summary=ModelSummary.from_ledger(cfg.model_name, eval_ledger, epoch_mqe[-1]),
        epoch_mqe=epoch_mqe,
        epoch_ops=epoch_ops,
        eval_ops={
            "output": OpCounts.of(eval_ledger.output),
            "features": OpCounts.of(eval_ledger.features),
        },
        target_range=target_range(data),
        warnings=phase1.warnings,
        config=cfg.model_dump(mode="json"),
        initial_vertices=[list(s.prototypes) for s in phase1.initial],
        presort_vertices=[list(s.presort or s.prototypes) for s in phase1.learned],
        learned_vertices=[list(s.prototypes) for s in phase1.learned],
        weights=model.weights.tolist(),
    )
    logger.info(f"Pipeline finished: training MQE={report.final_mqe:.4f}")
    return model, report


@inject
class RunPipelineUseCase:
    """NFN-MK 学習ユースケース"""

    def __init__(self, config: NfnConfig, repository: NfnModelRepository) -> None:
        """初期化

        Args:
            config: NFN モジュールの既定設定
            repository: 学習済みモデルの保存先リポジトリ
        """
        self._config = config
        self._repository = repository

    def resolve(self, overrides: dict[str, object]) -> PipelineConfig:
        """実験記述の値を既定設定に重ねる

        Args:
            overrides: 実験ファイル由来の上書き値 (入れ子のブロックはマージされる)

        Returns:
            検証済みの実行設定

        Raises:
            ValueError: 未知のキーや範囲外の値がある場合
        """
        return PipelineConfig.from_defaults(self._config, dict(overrides))

    def execute(
        self,
        cfg: PipelineConfig,
        data: Dataset,
        model_out: Path | None = None,
        progress: ProgressCallback | None = None,
    ) -> tuple[NfnModel, PipelineReport]:
        """S1 (SOM による頂点学習) と S2 (LMS による重み学習) を実行

        Args:
            cfg: 実行設定
            data: 学習データ
            model_out: 学習済みモデルの保存先。None なら保存しない
            progress: エポックごとに (エポック番号, 学習 MQE) で呼ばれるコールバック

        Returns:
            学習済みモデルと学習レポート
        """
        model, report = run_pipeline(cfg, data, progress)
        if model_out is not None:
            self._repository.save(model, model_out)
            logger.info(f"Model written to {model_out}")
        return model, report


@inject
class EvaluateNfnUseCase:
    """NFN-MK 評価ユースケース"""

    def __init__(self, repository: NfnModelRepository) -> None:
        """初期化

        Args:
            repository: 学習済みモデルの読み込み元リポジトリ
        """
        self._repository = repository

    def execute(self, model_path: Path, data: Dataset) -> EvaluationResult:
        """保存済みモデルをデータセットの全行で評価

        Args:
            model_path: モデルファイルのパス
            data: 評価データ

        Returns:
            行ごとの予測値と、評価できなかった行のエラー

        Raises:
            DataFormatError: モデルファイルが読めない場合
        """
        model = self._repository.load(model_path)
        return EvaluationResult.collect(data, lambda s: nfn_eval(model, s.x))


@inject
class ExportPartitionsUseCase:
    """メンバーシップ関数の折れ点出力ユースケース"""

    def __init__(self, repository: NfnModelRepository, exporter: PartitionExporter) -> None:
        """初期化

        Args:
            repository: 学習済みモデルの読み込み元リポジトリ
            exporter: 折れ点の書き出し先
        """
        self._repository = repository
        self._exporter = exporter

    def execute(self, model_path: Path, out_path: Path) -> int:
        """保存済みモデルの全三角形を CSV に書き出す

        Args:
            model_path: モデルファイルのパス
            out_path: 出力 CSV のパス

        Returns:
            書き出した行数
        """
        model = self._repository.load(model_path)
        return self._exporter.export(model, out_path)
