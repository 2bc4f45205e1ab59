"""JSON model files of the MLP baseline."""

import json
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ValidationError

from nfnmk.modules.common import DataFormatError

from .domain import MlpModel


class MlpModelDocument(BaseModel):
    """MLP モデルファイルの JSON スキーマ (w1 は 7x2、b1 と w2 は長さ 7)"""

    kind: Literal["mlp"] = "mlp"
    w1: list[list[float]]
    b1: list[float]
    w2: list[float]
    b2: float

    @classmethod
    def from_model(cls, m: MlpModel) -> "MlpModelDocument":
        """モデルからドキュメントを作成"""
        return cls(w1=m.w1.tolist(), b1=m.b1.tolist(), w2=m.w2.tolist(), b2=m.b2)

    def to_model(self) -> MlpModel:
        """ドキュメントからモデルを復元 (形が合わなければ ValueError)"""
        return MlpModel(self.w1, self.b1, self.w2, self.b2)


class JsonMlpModelRepository:
    """JSON ファイルによる MLP モデルリポジトリ"""

    def save(self, model: MlpModel, path: Path) -> None:
        """モデルを JSON で保存

        Args:
            model: 保存するモデル
            path: 出力先 (親ディレクトリは作成する)
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(MlpModelDocument.from_model(model).model_dump_json(indent=2) + "\n")

    def load(self, path: Path) -> MlpModel:
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
            return MlpModelDocument.model_validate(raw).to_model()
        except ValidationError as e:
            raise DataFormatError(f"{path}: not an MLP model: {e}") from e
        except ValueError as e:
            raise DataFormatError(f"{path}: {e}") from e
