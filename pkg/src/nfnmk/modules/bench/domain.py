"""Mexican-hat target, grid datasets, operation accounting and the model comparison table."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol

from nfnmk.modules.common import (
    Dataset,
    InstrumentationDisabledError,
    InstrumentedModel,
    ModelSummary,
    NfnMkError,
    OpCounter,
    OpLedger,
    OpScope,
    Sample,
)

logger = logging.getLogger(__name__)

SINC_SERIES_THRESHOLD = 1e-8


class InvalidGridError(NfnMkError, ValueError):
    """Raised when a grid has fewer than two points per axis or an empty domain."""


class EmptyComparisonError(NfnMkError, ValueError):
    """Raised when a comparison is requested without any model summary."""


def sinc(t: float) -> float:
    """sin(t)/t with the removable singularity filled in."""
    if t == 0.0:
        return 1.0
    if abs(t) < SINC_SERIES_THRESHOLD:
        return 1.0 - t * t / 6.0
    return math.sin(t) / t


def mexican_hat(x1: float, x2: float) -> float:
    """sinc(x1) * sinc(x2)."""
    return sinc(x1) * sinc(x2)


def grid_axis(n_per_axis: int, domain: tuple[float, float]) -> list[float]:
    """n equally spaced points from min to max inclusive.

    Points are weighted averages of the bounds, so a symmetric domain gives an exactly mirrored
    axis and an odd n puts its middle point at exactly 0.
    """
    lo, hi = domain
    if n_per_axis < 2:
        raise InvalidGridError(f"n_per_axis must be at least 2, got {n_per_axis}")
    if not lo < hi:
        raise InvalidGridError(f"domain ({lo}, {hi}) must satisfy min < max")
    last = n_per_axis - 1
    return [(lo * (last - k) + hi * k) / last for k in range(n_per_axis)]


def gen_grid(n_per_axis: int, domain: tuple[float, float]) -> Dataset:
    """n^2 Mexican-hat samples on the inclusive uniform grid, x1 major and x2 minor.

    Raises:
        InvalidGridError: If n_per_axis < 2 or the domain is empty.
    """
    axis = grid_axis(n_per_axis, domain)
    data = Dataset(tuple(Sample(a, b, mexican_hat(a, b)) for a in axis for b in axis))
    logger.debug(f"Generated {len(data)} samples on {domain}")
    return data


def count_eval_ops(
    model: object, x: Sequence[float], scope: OpScope = "output"
) -> OpCounter:
    """Operations performed by exactly one evaluation of `model` at `x`.

    `scope` selects the combination arithmetic ("output"), the feature arithmetic ("features")
    or both ("all").

    Raises:
        InstrumentationDisabledError: If the model cannot report its operations.
    """
    if not isinstance(model, InstrumentedModel):
        raise InstrumentationDisabledError(
            f"{type(model).__name__} does not support operation counting"
        )
    ledger = OpLedger()
    model.evaluate(x, ledger)
    return ledger.scoped(scope)


@dataclass(frozen=True)
class ReferenceRow:
    """A published comparison row kept as a constant."""

    model: str
    ops: int
    ops_per_function: int
    mqe: float


REFERENCE_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow("NFHQ", 168, 21, 0.0150),
    ReferenceRow("FSOM", 200, 101, 0.0314),
)

# Published values for the two models this package trains; listed only on request.
PUBLISHED_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow("NFN-MK (published)", 8, 2, 0.0426),
    ReferenceRow("NN (published)", 42, 8, 0.1037),
)

COMPARISON_HEADER = [
    "Model",
    "Operations (+,-,x)",
    "Operations by function",
    "MQE",
    "Operations incl. features",
]


@dataclass(frozen=True)
class ComparisonRow:
    """比較表の 1 行 (学習済みモデルまたは参照値)"""

    model: str
    ops: int
    ops_per_function: float
    mqe: float
    ops_all: int | None = None  # None for published rows
    reference: bool = False

    def cells(self) -> list[str]:
        """Display cells; MQE at 4 decimals."""
        return [
            self.model,
            str(self.ops),
            f"{self.ops_per_function:g}",
            f"{self.mqe:.4f}",
            "-" if self.ops_all is None else str(self.ops_all),
        ]


@dataclass(frozen=True)
class Comparison:
    """比較表の行と、除外した行の診断メッセージ"""

    rows: list[ComparisonRow]
    diagnostics: list[str] = field(default_factory=list)


def _reference(row: ReferenceRow) -> ComparisonRow:
    return ComparisonRow(row.model, row.ops, row.ops_per_function, row.mqe, reference=True)


def compare_models(
    summaries: Sequence[ModelSummary], include_published: bool = False
) -> Comparison:
    """Trained-model rows followed by the constant reference rows.

    Summaries without a model name are left out and reported in `diagnostics`.

    Raises:
        EmptyComparisonError: If `summaries` is empty.
    """
    if not summaries:
        raise EmptyComparisonError("at least one model report is required")

    rows: list[ComparisonRow] = []
    diagnostics: list[str] = []
    for i, s in enumerate(summaries, start=1):
        if not s.model.strip():
            message = f"report {i}: empty model name, row rejected"
            logger.warning(message)
            diagnostics.append(message)
            continue
        rows.append(ComparisonRow(s.model, s.ops_output, s.ops_per_function, s.mqe, s.ops_all))

    if include_published:
        rows.extend(_reference(r) for r in PUBLISHED_ROWS)
    rows.extend(_reference(r) for r in REFERENCE_ROWS)
    return Comparison(rows, diagnostics)


class DatasetRepository(Protocol):
    """Reads and writes `x1,x2,y` dataset files."""

    def save(self, data: Dataset, path: Path) -> int:
        """Write `data` and return the number of data rows."""
        ...

    def load(self, path: Path) -> Dataset:
        """Read a dataset.

        Raises:
            DataFormatError: With the offending line number when a row cannot be parsed.
        """
        ...


class PredictionWriter(Protocol):
    """Writes `x1,x2,y_true,y_pred` plot files."""

    def write(self, data: Dataset, predictions: Sequence[float | None], path: Path) -> int:
        """予測値を書き出し、データ行数を返す"""
        ...


class ReportReader(Protocol):
    """Reads the comparison summary out of a training report file."""

    def load_summary(self, path: Path) -> ModelSummary:
        """レポートファイルからモデル概要を読み込む

        Raises:
            DataFormatError: 学習レポートとして読めない場合
        """
        ...


class ComparisonWriter(Protocol):
    """比較表を CSV に書き出す"""

    def write(self, comparison: Comparison, path: Path) -> None:
        """比較表をヘッダ付きで書き出す"""
        ...
