"""Common value types, errors and utilities shared by the modules.

Everything here is imported by more than one module (`nfn`, `mlp`, `bench`), so it is the only
place the modular monolith allows cross-module sharing.
"""

import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal, Protocol, runtime_checkable

from platformdirs import PlatformDirs
from pydantic import BaseModel, ConfigDict, Field

pfd = PlatformDirs(appname="nfnmk", appauthor="nfnmk")


class NfnMkError(Exception):
    """Base class of every error raised by the nfnmk modules."""


class InvalidDomainError(NfnMkError, ValueError):
    """Raised when a domain does not satisfy min < max."""


class OutOfDomainError(NfnMkError, ValueError):
    """Raised when an input lies outside the closed domain of a partition."""


class DimensionMismatchError(NfnMkError, ValueError):
    """Raised when an input vector does not match the model input count."""


class EmptyDatasetError(NfnMkError, ValueError):
    """Raised when training is requested on an empty dataset or sample stream."""


class LengthMismatchError(NfnMkError, ValueError):
    """Raised when paired sequences have different lengths."""


class InstrumentationDisabledError(NfnMkError):
    """Raised when op counting is requested for a model without instrumented arithmetic."""


class DataFormatError(NfnMkError, ValueError):
    """Raised when a dataset, model or report file cannot be parsed."""


class CommonConfig(BaseModel):
    """
    Common configuration class for the application.

    This class holds global settings that can be accessed throughout the application.
    """

    logging_config: dict[str, Any] = Field(default_factory=dict)  # Logging configuration
    user_data_dir: str = Field(default=pfd.user_data_dir)  # Log files live under this dir


@dataclass(frozen=True)
class Sample:
    """One input/output pattern (x1, x2, y_d) of the identified process."""

    x1: float
    x2: float
    y_d: float

    def __post_init__(self) -> None:
        """値がすべて有限であることを検証"""
        if not all(math.isfinite(v) for v in (self.x1, self.x2, self.y_d)):
            raise ValueError(f"Sample values must be finite: {self}")

    @property
    def x(self) -> tuple[float, float]:
        """Input vector of the sample."""
        return (self.x1, self.x2)


@dataclass(frozen=True)
class Dataset:
    """Ordered collection of samples. Row order is part of the contract."""

    samples: tuple[Sample, ...]

    def __len__(self) -> int:
        """サンプル数"""
        return len(self.samples)

    def __getitem__(self, index: int) -> Sample:
        """index 番目のサンプル"""
        return self.samples[index]

    def __iter__(self) -> Iterator[Sample]:
        """格納順にサンプルを返す"""
        return iter(self.samples)

    @classmethod
    def of(cls, rows: Sequence[tuple[float, float, float]]) -> "Dataset":
        """Build a dataset from (x1, x2, y_d) rows."""
        return cls(tuple(Sample(float(a), float(b), float(c)) for a, b, c in rows))

    def column(self, index: int) -> list[float]:
        """Return the values of input coordinate `index` (0 for x1, 1 for x2)."""
        return [s.x[index] for s in self.samples]

    @property
    def targets(self) -> list[float]:
        """全サンプルの目標値 y_d (格納順)"""
        return [s.y_d for s in self.samples]

    def require_non_empty(self) -> None:
        """Raise EmptyDatasetError when there is nothing to train on."""
        if not self.samples:
            raise EmptyDatasetError("dataset is empty")


@dataclass
class OpCounter:
    """Tally of arithmetic operations (+, -, x are all weighted the same)."""

    adds: int = 0
    subs: int = 0
    muls: int = 0

    @property
    def total(self) -> int:
        """加減乗算の合計回数"""
        return self.adds + self.subs + self.muls

    def add(self, n: int = 1) -> None:
        """加算を n 回記録"""
        self.adds += n

    def sub(self, n: int = 1) -> None:
        """減算を n 回記録"""
        self.subs += n

    def mul(self, n: int = 1) -> None:
        """乗算を n 回記録"""
        self.muls += n

    def merge(self, other: "OpCounter") -> "OpCounter":
        """Return a new counter holding the sum of both tallies."""
        return OpCounter(self.adds + other.adds, self.subs + other.subs, self.muls + other.muls)

    def as_dict(self) -> dict[str, int]:
        """レポート出力用の辞書表現"""
        return {"adds": self.adds, "subs": self.subs, "muls": self.muls, "total": self.total}


OpScope = Literal["output", "features", "all"]


@dataclass
class OpLedger:
    """Operation counts of one or more model evaluations, split by role.

    `output` collects the arithmetic that combines features into the model output (the weighted
    sum of the neuro-fuzzy model, the layer algebra of the MLP). `features` collects the
    arithmetic needed to compute the features themselves (membership degrees).
    """

    output: OpCounter = field(default_factory=OpCounter)
    features: OpCounter = field(default_factory=OpCounter)
    functions: int = 0  # feature functions evaluated (membership curves, hidden units)

    def scoped(self, scope: OpScope) -> OpCounter:
        """役割ごとの演算数を取得

        Args:
            scope: "output" (出力の合成), "features" (特徴量の計算), "all" (両方)

        Returns:
            元の台帳とは独立した演算カウンタ
        """
        if scope == "output":
            return OpCounter(self.output.adds, self.output.subs, self.output.muls)
        if scope == "features":
            return OpCounter(self.features.adds, self.features.subs, self.features.muls)
        return self.output.merge(self.features)

    @property
    def total(self) -> int:
        """出力と特徴量を合わせた全演算数"""
        return self.output.total + self.features.total

    @property
    def per_function(self) -> float:
        """Feature arithmetic per evaluated feature function (0 when none were evaluated)."""
        return self.features.total / self.functions if self.functions else 0.0


@runtime_checkable
class InstrumentedModel(Protocol):
    """A model whose single evaluation can report its arithmetic operations."""

    @property
    def kind(self) -> str:
        """Model kind discriminator ("nfn" or "mlp")."""
        ...

    def evaluate(self, x: Sequence[float], ledger: OpLedger | None = None) -> float:
        """Evaluate the model on `x`, adding the performed operations to `ledger`."""
        ...


def mqe(predictions: Sequence[float], targets: Sequence[float]) -> float:
    """Mean quadratic error: (1/N) * sum((prediction - target)^2).

    The reduction runs left to right in input order so results are reproducible.

    Raises:
        LengthMismatchError: If the sequences differ in length.
        EmptyDatasetError: If the sequences are empty.
    """
    if len(predictions) != len(targets):
        raise LengthMismatchError(
            f"predictions ({len(predictions)}) and targets ({len(targets)}) differ in length"
        )
    if not predictions:
        raise EmptyDatasetError("mqe of an empty sequence is undefined")

    total = 0.0
    for p, t in zip(predictions, targets, strict=True):
        d = p - t
        total += d * d
    return total / len(predictions)


class TrainConfig(BaseModel):
    """Online training settings shared by the neuro-fuzzy model and the MLP baseline.

    A zero learning rate is accepted and turns training into the identity.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    learning_rate: float = Field(default=0.1, ge=0.0, description="LMS / backprop step size")
    epochs: int = Field(default=10, ge=1, description="Full passes over the dataset")
    shuffle_seed: int = Field(default=0, description="Seed of the per-epoch sample shuffle")
    shuffle: bool = Field(default=True, description="Shuffle samples every epoch")


class OpCounts(BaseModel):
    """Serialized form of an OpCounter."""

    adds: int = Field(ge=0)
    subs: int = Field(ge=0)
    muls: int = Field(ge=0)
    total: int = Field(ge=0)

    @classmethod
    def of(cls, counter: OpCounter) -> "OpCounts":
        """OpCounter からシリアライズ形式を作成"""
        return cls(**counter.as_dict())


class ModelSummary(BaseModel):
    """One row of the model comparison: operation counts of one evaluation and the MQE.

    `model` is not validated here so that an unnamed row can reach the comparison and be
    rejected there with a diagnostic.
    """

    model: str
    ops_output: int = Field(ge=0, description="Output combination ops per evaluation")
    ops_all: int = Field(ge=0, description="All ops per evaluation, features included")
    ops_per_function: float = Field(ge=0.0, description="Feature ops per feature function")
    mqe: float = Field(ge=0.0)

    @classmethod
    def from_ledger(cls, model: str, ledger: OpLedger, mqe_value: float) -> "ModelSummary":
        """演算台帳と MQE から比較行を作成

        Args:
            model: 比較表に載せるモデル名
            ledger: 1 回の評価の演算台帳
            mqe_value: 学習データ上の最終 MQE

        Returns:
            モデル概要
        """
        return cls(
            model=model,
            ops_output=ledger.output.total,
            ops_all=ledger.total,
            ops_per_function=ledger.per_function,
            mqe=mqe_value,
        )


class TrainingReport(BaseModel):
    """Fields every training report carries, whatever the model kind."""

    kind: str
    summary: ModelSummary
    epoch_mqe: list[float] = Field(description="Training-set MQE after every epoch")
    epoch_ops: list[int] = Field(description="Cumulative training ops after every epoch")
    eval_ops: dict[str, OpCounts] = Field(description="Ops of one evaluation, by role")
    target_range: tuple[float, float] = Field(description="True min/max of y_d in the data")
    warnings: list[str] = Field(default_factory=list)
    config: dict[str, Any] = Field(default_factory=dict, description="Resolved run settings")

    @property
    def final_mqe(self) -> float:
        """最終エポックの学習 MQE"""
        return self.epoch_mqe[-1]


@dataclass(frozen=True)
class RowError:
    """A dataset row that could not be evaluated (1-based row number, header excluded)."""

    row: int
    message: str


@dataclass(frozen=True)
class EvaluationResult:
    """Predictions of a model on a dataset; rows that failed hold None."""

    predictions: list[float | None]
    errors: list[RowError]
    mqe: float | None

    @classmethod
    def collect(
        cls, data: Dataset, evaluate: Callable[[Sample], float]
    ) -> "EvaluationResult":
        """Evaluate every sample, recording per-row failures instead of stopping."""
        predictions: list[float | None] = []
        errors: list[RowError] = []
        for row, sample in enumerate(data, start=1):
            try:
                predictions.append(evaluate(sample))
            except NfnMkError as e:
                predictions.append(None)
                errors.append(RowError(row, str(e)))
        pairs = [(p, s.y_d) for p, s in zip(predictions, data, strict=True) if p is not None]
        value = mqe([p for p, _ in pairs], [t for _, t in pairs]) if pairs else None
        return cls(predictions, errors, value)


def target_range(data: Dataset) -> tuple[float, float]:
    """Smallest and largest target value of a non-empty dataset."""
    data.require_non_empty()
    targets = data.targets
    return (min(targets), max(targets))
