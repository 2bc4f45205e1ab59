"""2-7-1 multilayer perceptron baseline: sigmoid hidden layer, identity output, online backprop."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import ClassVar, Literal, Protocol

import numpy as np
import numpy.typing as npt
from pydantic import Field

from nfnmk.modules.common import (
    Dataset,
    DimensionMismatchError,
    OpLedger,
    Sample,
    TrainConfig,
    TrainingReport,
    mqe,
)

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]

N_INPUTS = 2
N_HIDDEN = 7


def sigmoid(z: FloatArray) -> FloatArray:
    """Logistic function, stable for large |z|."""
    return np.exp(-np.logaddexp(0.0, -z))


def _frozen(values: npt.ArrayLike, shape: tuple[int, ...], name: str) -> FloatArray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MlpModel:
    """Weights of the 2-7-1 network. Arrays are read-only; updates return a new model."""

    kind: ClassVar[str] = "mlp"

    w1: FloatArray  # (7, 2) hidden weights
    b1: FloatArray  # (7,) hidden biases
    w2: FloatArray  # (7,) output weights
    b2: float

    def __post_init__(self) -> None:
        """パラメータを既定の形の読み取り専用配列に正規化"""
        object.__setattr__(self, "w1", _frozen(self.w1, (N_HIDDEN, N_INPUTS), "w1"))
        object.__setattr__(self, "b1", _frozen(self.b1, (N_HIDDEN,), "b1"))
        object.__setattr__(self, "w2", _frozen(self.w2, (N_HIDDEN,), "w2"))
        b2 = float(self.b2)
        if not np.isfinite(b2):
            raise ValueError("b2 is not finite")
        object.__setattr__(self, "b2", b2)

    @classmethod
    def zeros(cls) -> "MlpModel":
        """全パラメータが 0 のモデル"""
        return cls(
            np.zeros((N_HIDDEN, N_INPUTS)), np.zeros(N_HIDDEN), np.zeros(N_HIDDEN), 0.0
        )

    def evaluate(self, x: Sequence[float], ledger: OpLedger | None = None) -> float:
        """入力 x に対する順伝播の出力 (演算数は ledger に加算)"""
        return mlp_forward(self, x, ledger)


@dataclass(frozen=True)
class MlpGradients:
    """Gradient of 1/2 (y_d - y)^2 with respect to every parameter."""

    w1: FloatArray
    b1: FloatArray
    w2: FloatArray
    b2: float


EpochCallback = Callable[[int, MlpModel], None]


def mlp_init(seed: int, init_range: float = 0.5) -> MlpModel:
    """Weights drawn from uniform(-init_range, init_range), in the order w1, b1, w2, b2."""
    rng = np.random.default_rng(seed)
    w1 = rng.uniform(-init_range, init_range, (N_HIDDEN, N_INPUTS))
    b1 = rng.uniform(-init_range, init_range, N_HIDDEN)
    w2 = rng.uniform(-init_range, init_range, N_HIDDEN)
    b2 = float(rng.uniform(-init_range, init_range))
    return MlpModel(w1, b1, w2, b2)


def _input(x: Sequence[float]) -> FloatArray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape != (N_INPUTS,):
        raise DimensionMismatchError(f"input must have {N_INPUTS} coordinates, got {len(x)}")
    return arr


def _hidden(m: MlpModel, x: FloatArray, ledger: OpLedger | None) -> FloatArray:
    if ledger is not None:
        ledger.features.mul(N_HIDDEN * N_INPUTS)
        ledger.features.add(N_HIDDEN * N_INPUTS)
        ledger.functions += N_HIDDEN
    return sigmoid(m.w1 @ x + m.b1)


def _output(m: MlpModel, h: FloatArray, ledger: OpLedger | None) -> float:
    if ledger is not None:
        ledger.output.mul(N_HIDDEN)
        ledger.output.add(N_HIDDEN)
    return float(m.w2 @ h + m.b2)


def mlp_forward(m: MlpModel, x: Sequence[float], ledger: OpLedger | None = None) -> float:
    """identity(w2 . sigmoid(w1 x + b1) + b2)."""
    h = _hidden(m, _input(x), ledger)
    return _output(m, h, ledger)


def mlp_gradients(
    m: MlpModel, sample: Sample, ledger: OpLedger | None = None
) -> MlpGradients:
    """Backpropagated gradient of the half squared error on one sample."""
    x = _input(sample.x)
    h = _hidden(m, x, ledger)
    y = _output(m, h, ledger)
    delta = y - sample.y_d
    dz = delta * m.w2 * h * (1.0 - h)
    if ledger is not None:
        ledger.output.sub()
        ledger.output.mul(N_HIDDEN)  # w2 gradient
        ledger.output.mul(3 * N_HIDDEN)  # hidden deltas
        ledger.output.sub(N_HIDDEN)
        ledger.output.mul(N_HIDDEN * N_INPUTS)  # w1 gradient
    return MlpGradients(np.outer(dz, x), dz, delta * h, delta)


def mlp_step(
    m: MlpModel, sample: Sample, learning_rate: float, ledger: OpLedger | None = None
) -> MlpModel:
    """One online backprop step; returns a new model."""
    g = mlp_gradients(m, sample, ledger)
    if ledger is not None:
        n_params = N_HIDDEN * N_INPUTS + 2 * N_HIDDEN + 1
        ledger.output.mul(n_params)
        ledger.output.sub(n_params)
    return MlpModel(
        m.w1 - learning_rate * g.w1,
        m.b1 - learning_rate * g.b1,
        m.w2 - learning_rate * g.w2,
        m.b2 - learning_rate * g.b2,
    )


def mlp_train(
    m: MlpModel,
    data: Dataset,
    cfg: TrainConfig,
    on_epoch: EpochCallback | None = None,
    ledger: OpLedger | None = None,
) -> MlpModel:
    """Online backpropagation on 1/2 e^2 with a seeded shuffle per epoch.

    Raises:
        EmptyDatasetError: If `data` has no samples.
    """
    data.require_non_empty()
    rng = np.random.default_rng(cfg.shuffle_seed)
    n = len(data)
    for epoch in range(cfg.epochs):
        order = rng.permutation(n) if cfg.shuffle else np.arange(n)
        for idx in order:
            m = mlp_step(m, data[int(idx)], cfg.learning_rate, ledger)
        logger.debug(f"backprop epoch {epoch + 1}/{cfg.epochs} done")
        if on_epoch is not None:
            on_epoch(epoch, m)
    return m


def predict(m: MlpModel, data: Dataset) -> list[float]:
    """全サンプルに対する出力 (データセット順)"""
    return [mlp_forward(m, s.x) for s in data]


def training_mqe(m: MlpModel, data: Dataset) -> float:
    """データセット全体に対するモデルの MQE"""
    return mqe(predict(m, data), data.targets)


class MlpReport(TrainingReport):
    """Training report of the MLP baseline."""

    kind: Literal["mlp"] = "mlp"
    weights: dict[str, list[float] | list[list[float]] | float] = Field(
        description="Final w1, b1, w2, b2"
    )


class MlpModelRepository(Protocol):
    """Persistence of trained MLP models."""

    def save(self, model: MlpModel, path: Path) -> None:
        """Write `model` to `path`."""
        ...

    def load(self, path: Path) -> MlpModel:
        """Read a model from `path`.

        Raises:
            DataFormatError: If the file is not a valid MLP model document.
        """
        ...
