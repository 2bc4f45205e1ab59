"""One-dimensional Kohonen network that places the seven triangle vertices of one input."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from nfnmk.modules.common import EmptyDatasetError, OutOfDomainError

from .membership import N_CURVES, uniform_vertices

logger = logging.getLogger(__name__)


class SomSchedule(BaseModel):
    """Learning-rate and neighbourhood schedule of the vertex SOM.

    The rate decays linearly from `initial_rate` to `final_rate` over the epochs; the
    neighbourhood radius decays linearly from `initial_radius` to 0 at the last epoch. Rates of
    0 are accepted and freeze the prototypes.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    initial_rate: float = Field(default=0.5, ge=0.0, le=1.0)
    final_rate: float = Field(default=0.01, ge=0.0, le=1.0)
    initial_radius: int = Field(default=1, ge=0, le=N_CURVES - 1)
    epochs: int = Field(default=50, ge=1)

    @model_validator(mode="after")
    def _final_not_above_initial(self) -> "SomSchedule":
        if self.final_rate > self.initial_rate:
            raise ValueError(
                f"final_rate ({self.final_rate}) must not exceed initial_rate ({self.initial_rate})"
            )
        return self

    def at(self, epoch: int) -> tuple[float, int]:
        """(rate, radius) in effect during `epoch` (0-based)."""
        frac = epoch / (self.epochs - 1) if self.epochs > 1 else 0.0
        rate = self.initial_rate + (self.final_rate - self.initial_rate) * frac
        radius = math.floor(self.initial_radius * (1.0 - frac) + 0.5)
        return rate, radius


@dataclass(frozen=True)
class SomState:
    """Seven scalar prototypes of one input, one per fuzzy label.

    `presort` keeps the prototype order reached by training before the final sort, for
    diagnostics; it is None for states that were never trained.
    """

    prototypes: tuple[float, ...]
    domain_min: float
    domain_max: float
    presort: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        """プロトタイプ数と定義域内にあることを検証"""
        if len(self.prototypes) != N_CURVES:
            raise ValueError(f"expected {N_CURVES} prototypes, got {len(self.prototypes)}")
        outside = [p for p in self.prototypes if not self.domain_min <= p <= self.domain_max]
        if outside:
            raise OutOfDomainError(
                f"prototypes {outside} lie outside [{self.domain_min}, {self.domain_max}]"
            )

    @property
    def crossed(self) -> bool:
        """True when training left the prototypes out of order before the final sort."""
        return self.presort is not None and list(self.presort) != sorted(self.presort)

    def coincident(self) -> list[tuple[int, int]]:
        """Adjacent index pairs (k, k + 1) holding the same prototype value."""
        p = self.prototypes
        return [(k, k + 1) for k in range(N_CURVES - 1) if p[k] == p[k + 1]]


def som_init(domain_min: float, domain_max: float) -> SomState:
    """Prototypes equally spaced from domain_min to domain_max.

    Raises:
        InvalidDomainError: If domain_min >= domain_max.
    """
    return SomState(tuple(uniform_vertices(domain_min, domain_max)), domain_min, domain_max)


def winner(state: SomState, x: float) -> int:
    """Index of the prototype nearest to `x`; the lowest index wins ties."""
    distances = np.abs(np.asarray(state.prototypes) - x)
    return int(np.argmin(distances))


def _update(prototypes: np.ndarray, x: float, rate: float, radius: int) -> None:
    k = int(np.argmin(np.abs(prototypes - x)))
    lo = max(0, k - radius)
    hi = min(N_CURVES - 1, k + radius)
    prototypes[lo : hi + 1] += rate * (x - prototypes[lo : hi + 1])


def som_step(state: SomState, x: float, rate: float, radius: int = 0) -> SomState:
    """Move the winner for `x` and its neighbours within `radius` toward `x` (no sort)."""
    prototypes = np.array(state.prototypes, dtype=np.float64)
    _update(prototypes, x, rate, radius)
    clipped = np.clip(prototypes, state.domain_min, state.domain_max)
    return SomState(tuple(float(p) for p in clipped), state.domain_min, state.domain_max)


def som_train(
    state: SomState, samples: Sequence[float], sched: SomSchedule, seed: int
) -> SomState:
    """Train the prototypes on a scalar sample stream.

    Every epoch visits all samples in an order drawn from a generator seeded with `seed`. The
    result is sorted ascending and clamped to the domain.

    Raises:
        EmptyDatasetError: If `samples` is empty.
        OutOfDomainError: If a sample lies outside the state's domain.
    """
    values = np.asarray(samples, dtype=np.float64)
    if values.size == 0:
        raise EmptyDatasetError("SOM training needs at least one sample")
    outside = values[(values < state.domain_min) | (values > state.domain_max)]
    if outside.size:
        raise OutOfDomainError(
            f"{outside.size} samples lie outside [{state.domain_min}, {state.domain_max}]"
        )

    prototypes = np.array(state.prototypes, dtype=np.float64)
    rng = np.random.default_rng(seed)
    for epoch in range(sched.epochs):
        rate, radius = sched.at(epoch)
        for idx in rng.permutation(values.size):
            _update(prototypes, float(values[idx]), rate, radius)
        logger.debug(f"SOM epoch {epoch + 1}/{sched.epochs}: rate={rate:.4f} radius={radius}")

    presort = tuple(float(p) for p in prototypes)
    final = np.clip(np.sort(prototypes), state.domain_min, state.domain_max)
    return SomState(
        tuple(float(p) for p in final), state.domain_min, state.domain_max, presort=presort
    )
