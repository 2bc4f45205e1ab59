"""Pipeline configuration, reports and repository interfaces of the neuro-fuzzy module."""

from pathlib import Path
from typing import Any, Literal, Protocol

from pydantic import ConfigDict, Field

from nfnmk.modules.common import TrainingReport

from .config import NfnConfig
from .neuron import NfnModel


class PipelineConfig(NfnConfig):
    """One two-phase training run: SOM vertex learning, then LMS weight fitting."""

    model_config = ConfigDict(extra="forbid")

    dataset: str | None = Field(default=None, description="Path of the training dataset CSV")

    @classmethod
    def from_defaults(cls, defaults: NfnConfig, overrides: dict[str, Any]) -> "PipelineConfig":
        """Layer experiment-file values over the module defaults (nested blocks merge)."""
        merged = defaults.model_dump()
        for key, value in overrides.items():
            if isinstance(value, dict) and isinstance(merged.get(key), dict):
                merged[key] = {**merged[key], **value}
            else:
                merged[key] = value
        return cls.model_validate(merged)


class PipelineReport(TrainingReport):
    """Everything a pipeline run produced besides the model itself."""

    kind: Literal["nfn"] = "nfn"
    initial_vertices: list[list[float]]
    presort_vertices: list[list[float]] = Field(description="SOM prototypes before the sort")
    learned_vertices: list[list[float]]
    weights: list[list[float]]


class NfnModelRepository(Protocol):
    """Persistence of trained neuro-fuzzy models."""

    def save(self, model: NfnModel, path: Path) -> None:
        """Write `model` to `path`."""
        ...

    def load(self, path: Path) -> NfnModel:
        """Read a model from `path`.

        Raises:
            DataFormatError: If the file is not a valid neuro-fuzzy model document.
        """
        ...


class PartitionExporter(Protocol):
    """Writes triangle breakpoints of a model for plotting."""

    def export(self, model: NfnModel, path: Path) -> int:
        """Write one row per (input, curve) and return the row count."""
        ...
