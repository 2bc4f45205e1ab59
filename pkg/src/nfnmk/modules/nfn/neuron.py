"""Neo-Fuzzy-Neuron: one bank of seven triangles per input, combined by segment weights.

The output is the sum over inputs of the two active degrees times their weights. Weights are
fitted online by LMS; each step touches only the active pair of every input.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
import numpy.typing as npt

from nfnmk.modules.common import (
    Dataset,
    DimensionMismatchError,
    OpCounter,
    OpLedger,
    Sample,
    TrainConfig,
    mqe,
)

from .membership import N_CURVES, ActivePair, FuzzyPartition, active_pair, uniform_partition

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class NfnModel:
    """Per-input partitions plus the 7 segment weights of every input.

    `weights[i, j]` is the weight of curve j of input i. The array is read-only; updates return a
    new model.
    """

    kind: ClassVar[str] = "nfn"

    partitions: tuple[FuzzyPartition, ...]
    weights: FloatArray

    def __post_init__(self) -> None:
        """重みを (入力数, 7) の読み取り専用配列に正規化"""
        weights = np.array(self.weights, dtype=np.float64, copy=True).reshape(
            len(self.partitions), N_CURVES
        )
        weights.setflags(write=False)
        object.__setattr__(self, "partitions", tuple(self.partitions))
        object.__setattr__(self, "weights", weights)

    @classmethod
    def zeros(cls, partitions: Sequence[FuzzyPartition]) -> "NfnModel":
        """Model with every weight set to 0."""
        return cls(tuple(partitions), np.zeros((len(partitions), N_CURVES)))

    @classmethod
    def uniform(cls, domains: Sequence[tuple[float, float]]) -> "NfnModel":
        """Zero-weight model over uniform partitions of the given domains."""
        return cls.zeros([uniform_partition(lo, hi) for lo, hi in domains])

    @property
    def n_inputs(self) -> int:
        """入力次元数"""
        return len(self.partitions)

    def evaluate(self, x: Sequence[float], ledger: OpLedger | None = None) -> float:
        """入力 x に対するモデル出力

        Args:
            x: 入力ベクトル (各座標は対応する分割の定義域内)
            ledger: 演算数を加算する台帳。None なら計測しない

        Returns:
            重み付き和による出力

        Raises:
            OutOfDomainError: 座標が定義域外の場合
        """
        return nfn_eval(self, x, ledger)


EpochCallback = Callable[[int, NfnModel], None]


def _active_pairs(
    partitions: Sequence[FuzzyPartition], x: Sequence[float], ops: OpCounter | None
) -> list[ActivePair]:
    if len(x) != len(partitions):
        raise DimensionMismatchError(
            f"input has {len(x)} coordinates, model has {len(partitions)} inputs"
        )
    return [active_pair(p, float(xi), ops) for p, xi in zip(partitions, x, strict=True)]


def _weighted_sum(
    pairs: Sequence[ActivePair], weights: FloatArray, ops: OpCounter | None
) -> float:
    y = 0.0
    for i, pair in enumerate(pairs):
        row = weights[i]
        term = pair.mu_m * float(row[pair.m]) + pair.mu_m1 * float(row[pair.m1])
        if ops is not None:
            ops.mul(2)
            ops.add(1 if i == 0 else 2)
        y = term if i == 0 else y + term
    return y


def nfn_eval(model: NfnModel, x: Sequence[float], ledger: OpLedger | None = None) -> float:
    """Model output for input vector `x`.

    Raises:
        DimensionMismatchError: If len(x) differs from the model input count.
        OutOfDomainError: If a coordinate lies outside its partition domain.
    """
    pairs = _active_pairs(model.partitions, x, ledger.features if ledger else None)
    if ledger is not None:
        ledger.functions += 2 * len(pairs)
    return _weighted_sum(pairs, model.weights, ledger.output if ledger else None)


def _lms_update(
    partitions: Sequence[FuzzyPartition],
    weights: FloatArray,
    sample: Sample,
    learning_rate: float,
    ledger: OpLedger | None,
) -> None:
    """Apply one LMS step to `weights` in place."""
    pairs = _active_pairs(partitions, sample.x, ledger.features if ledger else None)
    if ledger is not None:
        ledger.functions += 2 * len(pairs)
    y = _weighted_sum(pairs, weights, ledger.output if ledger else None)
    gain = learning_rate * (sample.y_d - y)
    for i, pair in enumerate(pairs):
        weights[i, pair.m] += gain * pair.mu_m
        weights[i, pair.m1] += gain * pair.mu_m1
    if ledger is not None:
        ledger.output.sub()
        ledger.output.mul(1 + 2 * len(pairs))
        ledger.output.add(2 * len(pairs))


def lms_step(
    model: NfnModel, sample: Sample, learning_rate: float, ledger: OpLedger | None = None
) -> NfnModel:
    """One online update w <- w + learning_rate * (y_d - y) * mu on the active weights.

    Returns a new model; `model` is left unchanged.
    """
    weights = np.array(model.weights)
    _lms_update(model.partitions, weights, sample, learning_rate, ledger)
    return NfnModel(model.partitions, weights)


def train_weights(
    model: NfnModel,
    data: Dataset,
    cfg: TrainConfig,
    on_epoch: EpochCallback | None = None,
    ledger: OpLedger | None = None,
) -> NfnModel:
    """Fit the segment weights with `cfg.epochs` passes of online LMS.

    Sample order is reshuffled every epoch from a generator seeded with `cfg.shuffle_seed`, so
    identical inputs give bit-identical weights.

    Raises:
        EmptyDatasetError: If `data` has no samples.
    """
    data.require_non_empty()
    weights = np.array(model.weights)
    rng = np.random.default_rng(cfg.shuffle_seed)
    n = len(data)
    for epoch in range(cfg.epochs):
        order = rng.permutation(n) if cfg.shuffle else np.arange(n)
        for idx in order:
            _lms_update(model.partitions, weights, data[int(idx)], cfg.learning_rate, ledger)
        logger.debug(f"LMS epoch {epoch + 1}/{cfg.epochs} done")
        if on_epoch is not None:
            on_epoch(epoch, NfnModel(model.partitions, weights))
    return NfnModel(model.partitions, weights)


def predict(model: NfnModel, data: Dataset) -> list[float]:
    """Model outputs for every sample, in dataset order."""
    return [nfn_eval(model, s.x) for s in data]


def training_mqe(model: NfnModel, data: Dataset) -> float:
    """データセット全体に対するモデルの MQE"""
    return mqe(predict(model, data), data.targets)


def sample_point(model: NfnModel) -> list[float]:
    """An input where every coordinate sits inside the widest segment of its partition.

    Both active curves are then on a sloped side, so one evaluation there performs the full
    membership arithmetic.
    """
    point = []
    for p in model.partitions:
        v = p.vertices
        widths = [v[j + 1] - v[j] for j in range(N_CURVES - 1)]
        k = widths.index(max(widths))
        point.append(0.5 * (v[k] + v[k + 1]))
    return point


# Averaged final weights published with the New Values partition; a file-format fixture only.
PUBLISHED_FINAL_WEIGHTS: tuple[tuple[float, ...], ...] = (
    (0.0715, -0.1414, 0.5154, -0.0824, 0.0143, 0.0739, 0.0),
    (-0.0643, 0.0103, 0.4973, 0.0321, 0.1714, -0.0463, 0.0358),
)
