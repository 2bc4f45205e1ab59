"""MLP baseline use cases: training under the same protocol as NFN-MK, and evaluation."""

import logging
from collections.abc import Callable
from pathlib import Path

from injector import inject

from nfnmk.modules.common import (
    Dataset,
    EvaluationResult,
    ModelSummary,
    OpCounts,
    OpLedger,
    target_range,
)

from .config import MlpConfig, MlpExperimentConfig
from .domain import MlpModel, MlpModelRepository, MlpReport, mlp_forward, mlp_init, mlp_train
from .domain import training_mqe as mlp_training_mqe

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, float], None]


def train_baseline(
    cfg: MlpExperimentConfig, data: Dataset, progress: ProgressCallback | None = None
) -> tuple[MlpModel, MlpReport]:
    """Initialise from the seed, train, and report per-epoch MQE and op counts."""
    ledger = OpLedger()
    epoch_mqe: list[float] = []
    epoch_ops: list[int] = []

    def record(epoch: int, model: MlpModel) -> None:
        value = mlp_training_mqe(model, data)
        epoch_mqe.append(value)
        epoch_ops.append(ledger.total)
        logger.debug(f"epoch {epoch + 1}: MQE={value:.6f}")
        if progress is not None:
            progress(epoch, value)

    logger.info(f"Backprop over {len(data)} samples, {cfg.train.epochs} epochs")
    model = mlp_train(
        mlp_init(cfg.init_seed, cfg.init_range), data, cfg.train, on_epoch=record, ledger=ledger
    )

    eval_ledger = OpLedger()
    mlp_forward(model, data[0].x, eval_ledger)

    report = MlpReport(
        summary=ModelSummary.from_ledger(cfg.model_name, eval_ledger, epoch_mqe[-1]),
        epoch_mqe=epoch_mqe,
        epoch_ops=epoch_ops,
        eval_ops={
            "output": OpCounts.of(eval_ledger.output),
            "features": OpCounts.of(eval_ledger.features),
        },
        target_range=target_range(data),
        config=cfg.model_dump(mode="json"),
        weights={
            "w1": model.w1.tolist(),
            "b1": model.b1.tolist(),
            "w2": model.w2.tolist(),
            "b2": model.b2,
        },
    )
    logger.info(f"Baseline finished: training MQE={report.final_mqe:.4f}")
    return model, report


@inject
class TrainMlpUseCase:
    """MLP ベースライン学習ユースケース"""

    def __init__(self, config: MlpConfig, repository: MlpModelRepository) -> None:
        """初期化

        Args:
            config: MLP モジュールの既定設定
            repository: 学習済みモデルの保存先リポジトリ
        """
        self._config = config
        self._repository = repository

    def resolve(self, overrides: dict[str, object]) -> MlpExperimentConfig:
        """実験記述の値を既定設定に重ねる

        Raises:
            ValueError: 未知のキーや範囲外の値がある場合
        """
        return MlpExperimentConfig.from_defaults(self._config, dict(overrides))

    def execute(
        self,
        cfg: MlpExperimentConfig,
        data: Dataset,
        model_out: Path | None = None,
        progress: ProgressCallback | None = None,
    ) -> tuple[MlpModel, MlpReport]:
        """シードから初期化し、NFN-MK と同じ手順で逆伝播学習する

        Args:
            cfg: 実行設定
            data: 学習データ
            model_out: 学習済みモデルの保存先。None なら保存しない
            progress: エポックごとに (エポック番号, 学習 MQE) で呼ばれるコールバック

        Returns:
            学習済みモデルと学習レポート
        """
        model, report = train_baseline(cfg, data, progress)
        if model_out is not None:
            self._repository.save(model, model_out)
            logger.info(f"Model written to {model_out}")
        return model, report


@inject
class EvaluateMlpUseCase:
    """MLP ベースライン評価ユースケース"""

    def __init__(self, repository: MlpModelRepository) -> None:
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
        """
        model = self._repository.load(model_path)
        return EvaluationResult.collect(data, lambda s: mlp_forward(model, s.x))
