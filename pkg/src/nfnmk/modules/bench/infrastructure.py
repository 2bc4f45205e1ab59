"""CSV datasets, prediction files and report summaries."""

import csv
import io
import json
import logging
import math
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from nfnmk.modules.common import DataFormatError, Dataset, ModelSummary, Sample, TrainingReport

from .domain import COMPARISON_HEADER, Comparison

logger = logging.getLogger(__name__)

DATASET_HEADER = ["x1", "x2", "y"]
PREDICTION_HEADER = ["x1", "x2", "y_true", "y_pred"]


def _parse_float(path: Path, line: int, text: str) -> float:
    try:
        value = float(text)
    except ValueError as e:
        raise DataFormatError(f"{path}: line {line}: not a number: {text!r}") from e
    if not math.isfinite(value):
        raise DataFormatError(f"{path}: line {line}: value must be finite: {text!r}")
    return value


class CsvDatasetRepository:
    """DatasetRepository with full-precision (repr) decimals."""

    def save(self, data: Dataset, path: Path) -> int:
        """データセットを CSV に保存

        Args:
            data: 保存するデータセット
            path: 出力先 (親ディレクトリは作成する)

        Returns:
            書き出したデータ行数
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(DATASET_HEADER)
            for s in data:
                writer.writerow([repr(s.x1), repr(s.x2), repr(s.y_d)])
        logger.info(f"Wrote {len(data)} samples to {path}")
        return len(data)

    def load(self, path: Path) -> Dataset:
        """CSV からデータセットを読み込む (空行は読み飛ばす)

        Args:
            path: データセットファイルのパス

        Returns:
            ファイルの行順のデータセット

        Raises:
            DataFormatError: ヘッダ・列数・数値が不正な場合 (行番号付き)
        """
        with open(path, newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header is None:
                raise DataFormatError(f"{path}: line 1: missing header")
            if [h.strip() for h in header] != DATASET_HEADER:
                raise DataFormatError(
                    f"{path}: line 1: expected header {','.join(DATASET_HEADER)}, "
                    f"got {','.join(header)}"
                )
            samples: list[Sample] = []
            for record in reader:
                line = reader.line_num
                if not record:
                    continue
                if len(record) != len(DATASET_HEADER):
                    raise DataFormatError(
                        f"{path}: line {line}: expected {len(DATASET_HEADER)} fields, "
                        f"got {len(record)}"
                    )
                x1, x2, y = (_parse_float(path, line, v) for v in record)
                samples.append(Sample(x1, x2, y))
        logger.debug(f"Read {len(samples)} samples from {path}")
        return Dataset(tuple(samples))


class CsvPredictionWriter:
    """PredictionWriter; rows whose prediction failed get an empty y_pred cell."""

    def write(self, data: Dataset, predictions: Sequence[float | None], path: Path) -> int:
        """予測値を書き出す

        Args:
            data: 評価したデータセット
            predictions: 行ごとの予測値。評価できなかった行は None
            path: 出力 CSV のパス

        Returns:
            書き出したデータ行数
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(PREDICTION_HEADER)
            for s, p in zip(data, predictions, strict=True):
                writer.writerow([repr(s.x1), repr(s.x2), repr(s.y_d), "" if p is None else repr(p)])
        return len(data)


class JsonReportReader:
    """ReportReader for the report JSON written by `train`, whatever the model kind."""

    def load_summary(self, path: Path) -> ModelSummary:
        """レポートの summary ブロックを読み込む

        Raises:
            DataFormatError: JSON として不正、または学習レポートでない場合
        """
        try:
            raw = json.loads(path.read_text())
        except json.JSONDecodeError as e:
            raise DataFormatError(f"{path}: line {e.lineno}: {e.msg}") from e
        try:
            return TrainingReport.model_validate(raw).summary
        except ValidationError as e:
            raise DataFormatError(f"{path}: not a training report: {e}") from e


def comparison_csv(comparison: Comparison) -> str:
    """比較表を CSV テキストに変換 (表示と同じセル書式)"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COMPARISON_HEADER)
    for row in comparison.rows:
        writer.writerow(row.cells())
    return buffer.getvalue()


class CsvComparisonWriter:
    """CSV ファイルによる ComparisonWriter"""

    def write(self, comparison: Comparison, path: Path) -> None:
        """比較表を CSV に保存 (親ディレクトリは作成する)"""
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(comparison_csv(comparison))
