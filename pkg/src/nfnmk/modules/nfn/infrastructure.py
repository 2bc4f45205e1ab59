"""File formats of the neuro-fuzzy module: model JSON and partition breakpoint CSV."""

import csv
import json
import logging
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError

from nfnmk.modules.common import DataFormatError

from .membership import N_CURVES, FuzzyLabel, FuzzyPartition, rebuild_partition, sample_partition
from .neuron import NfnModel

logger = logging.getLogger(__name__)


class CurveDocument(BaseModel):
    """One triangle; field order is fixed for diff-stable files."""

    label: FuzzyLabel
    left: float
    vertex: float
    right: float


class PartitionDocument(BaseModel):
    """1 入力分の分割 (定義域と 7 つの三角形)"""

    domain: tuple[float, float]
    curves: list[CurveDocument] = Field(min_length=N_CURVES, max_length=N_CURVES)

    @classmethod
    def from_partition(cls, p: FuzzyPartition) -> "PartitionDocument":
        """分割からドキュメントを作成"""
        return cls(
            domain=(p.domain_min, p.domain_max),
            curves=[
                CurveDocument(label=label, left=left, vertex=vertex, right=right)
                for label, left, vertex, right in sample_partition(p)
            ],
        )

    def to_partition(self) -> FuzzyPartition:
        """Rebuild the partition from its vertices and check the stored breakpoints agree."""
        labels = [c.label for c in self.curves]
        if labels != list(FuzzyLabel.ordered()):
            raise DataFormatError(f"curves must be labelled {[str(x.value) for x in FuzzyLabel]}")
        lo, hi = self.domain
        p = rebuild_partition([c.vertex for c in self.curves], lo, hi)
        for stored, built in zip(self.curves, p.curves, strict=True):
            if (stored.left, stored.right) != (built.left, built.right):
                raise DataFormatError(
                    f"curve {stored.label.value} ends ({stored.left}, {stored.right}) do not match "
                    f"its neighbours' vertices ({built.left}, {built.right})"
                )
        return p


class NfnModelDocument(BaseModel):
    """NFN-MK モデルファイルの JSON スキーマ"""

    kind: Literal["nfn"] = "nfn"
    partitions: list[PartitionDocument]
    weights: list[list[float]]

    @classmethod
    def from_model(cls, model: NfnModel) -> "NfnModelDocument":
        """モデルからドキュメントを作成"""
        return cls(
            partitions=[PartitionDocument.from_partition(p) for p in model.partitions],
            weights=model.weights.tolist(),
        )

    def to_model(self) -> NfnModel:
        """ドキュメントからモデルを復元

        Raises:
            DataFormatError: 重み行列の形が分割数と合わない場合
        """
        if len(self.weights) != len(self.partitions) or any(
            len(row) != N_CURVES for row in self.weights
        ):
            raise DataFormatError(
                f"weights must be {len(self.partitions)} rows of {N_CURVES} values"
            )
        return NfnModel(tuple(d.to_partition() for d in self.partitions), self.weights)


class JsonNfnModelRepository:
    """JSON ファイルによる NFN-MK モデルリポジトリ"""

    def save(self, model: NfnModel, path: Path) -> None:
        """モデルを JSON で保存 (親ディレクトリは作成する)

        Args:
            model: 保存するモデル
            path: 出力先
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(NfnModelDocument.from_model(model).model_dump_json(indent=2) + "\n")

    def load(self, path: Path) -> NfnModel:
        """JSON からモデルを読み込む

        Args:
            path: モデルファイルのパス

        Returns:
            復元したモデル

        Raises:
            DataFormatError: JSON として不正、またはモデルとして矛盾している場合
        """
        try:
            raw = json.loads(path.read_text())
        except json.JSONDecodeError as e:
            raise DataFormatError(f"{path}: line {e.lineno}: {e.msg}") from e
        try:
            return NfnModelDocument.model_validate(raw).to_model()
        except ValidationError as e:
            raise DataFormatError(f"{path}: not a neuro-fuzzy model: {e}") from e
        except ValueError as e:
            raise DataFormatError(f"{path}: {e}") from e


class CsvPartitionExporter:
    """Writes `input,label,left,vertex,right` rows, one per curve."""

    def export(self, model: NfnModel, path: Path) -> int:
        """全入力の全曲線を書き出す

        Args:
            model: 対象モデル
            path: 出力 CSV のパス

        Returns:
            書き出したデータ行数 (ヘッダを除く)
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        rows = 0
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["input", "label", "left", "vertex", "right"])
            for i, p in enumerate(model.partitions, start=1):
                for label, left, vertex, right in sample_partition(p):
                    writer.writerow([i, label.value, repr(left), repr(vertex), repr(right)])
                    rows += 1
        logger.info(f"Wrote {rows} partition rows to {path}")
        return rows
