"""Benchmark use cases: dataset generation and I/O, prediction files and model comparison."""

import logging
from collections.abc import Sequence
from pathlib import Path

from injector import inject

from nfnmk.modules.common import Dataset

from .config import BenchConfig
from .domain import (
    Comparison,
    ComparisonWriter,
    DatasetRepository,
    PredictionWriter,
    ReportReader,
    compare_models,
    gen_grid,
)

logger = logging.getLogger(__name__)


@inject
class GenerateDatasetUseCase:
    """メキシカンハット格子データ生成ユースケース"""

    def __init__(self, config: BenchConfig, repository: DatasetRepository) -> None:
        """初期化

        Args:
            config: ベンチマークの既定設定
            repository: データセットの保存先
        """
        self._config = config
        self._repository = repository

    def execute(
        self,
        n_per_axis: int | None = None,
        domain: tuple[float, float] | None = None,
        out_path: Path | None = None,
    ) -> Dataset:
        """格子データを生成し、指定があれば CSV に保存

        Args:
            n_per_axis: 1 軸あたりの点数。None なら設定値
            domain: 両軸の定義域。None なら設定値
            out_path: 保存先。None なら保存しない

        Returns:
            x1 を外側ループとする n_per_axis^2 個のサンプル

        Raises:
            InvalidGridError: 点数が 2 未満、または min >= max の場合
        """
        n = self._config.n_per_axis if n_per_axis is None else n_per_axis
        bounds = self._config.domain if domain is None else domain
        data = gen_grid(n, bounds)
        if out_path is not None:
            self._repository.save(data, out_path)
        return data


@inject
class LoadDatasetUseCase:
    """データセット読み込みユースケース"""

    def __init__(self, repository: DatasetRepository) -> None:
        """初期化

        Args:
            repository: データセットの読み込み元
        """
        self._repository = repository

    def execute(self, path: Path) -> Dataset:
        """CSV からデータセットを読み込む

        Args:
            path: データセットファイルのパス

        Returns:
            ファイルの行順のデータセット

        Raises:
            DataFormatError: 不正な行がある場合 (行番号付き)
        """
        return self._repository.load(path)


@inject
class WritePredictionsUseCase:
    """予測値ファイル出力ユースケース"""

    def __init__(self, writer: PredictionWriter) -> None:
        """初期化

        Args:
            writer: 予測値の書き出し先
        """
        self._writer = writer

    def execute(self, data: Dataset, predictions: Sequence[float | None], path: Path) -> int:
        """`x1,x2,y_true,y_pred` 形式で予測値を書き出す

        Args:
            data: 評価したデータセット
            predictions: 行ごとの予測値。評価できなかった行は None
            path: 出力 CSV のパス

        Returns:
            書き出した行数
        """
        rows = self._writer.write(data, predictions, path)
        logger.info(f"Wrote {rows} predictions to {path}")
        return rows


@inject
class CompareModelsUseCase:
    """モデル比較表作成ユースケース"""

    def __init__(
        self, config: BenchConfig, reader: ReportReader, writer: ComparisonWriter
    ) -> None:
        """初期化

        Args:
            config: ベンチマークの既定設定
            reader: 学習レポートの読み込み元
            writer: 比較表 CSV の書き出し先
        """
        self._config = config
        self._reader = reader
        self._writer = writer

    def execute(self, report_paths: Sequence[Path], csv_path: Path | None = None) -> Comparison:
        """学習レポートから比較表を作成

        Args:
            report_paths: 学習レポートのパス (比較表の行順)
            csv_path: 比較表 CSV の保存先。None なら保存しない

        Returns:
            学習済みモデルの行と参照行からなる比較表

        Raises:
            EmptyComparisonError: レポートが 1 つもない場合
            DataFormatError: レポートが読めない場合
        """
        summaries = [self._reader.load_summary(p) for p in report_paths]
        comparison = compare_models(summaries, self._config.include_published)
        if csv_path is not None:
            self._writer.write(comparison, csv_path)
            logger.info(f"Comparison written to {csv_path}")
        return comparison
