"""NFN-MK module.

Neo-Fuzzy-Neuron whose triangular partitions are placed by a one-dimensional Kohonen network:
membership partitions, the neuron itself, the vertex SOM and the two-phase training pipeline.
"""

from .config import NfnConfig
from .domain import NfnModelRepository, PartitionExporter, PipelineConfig, PipelineReport
from .infrastructure import CsvPartitionExporter, JsonNfnModelRepository
from .membership import (
    FuzzyLabel,
    FuzzyPartition,
    TriangularMf,
    active_pair,
    eval_triangle,
    rebuild_partition,
    uniform_partition,
)
from .neuron import NfnModel, lms_step, nfn_eval, train_weights
from .som import SomSchedule, SomState, som_init, som_train, winner
from .usecases import (
    EvaluateNfnUseCase,
    ExportPartitionsUseCase,
    RunPipelineUseCase,
    run_pipeline,
)

__all__ = [
    "CsvPartitionExporter",
    "EvaluateNfnUseCase",
    "ExportPartitionsUseCase",
    "FuzzyLabel",
    "FuzzyPartition",
    "JsonNfnModelRepository",
    "NfnConfig",
    "NfnModel",
    "NfnModelRepository",
    "PartitionExporter",
    "PipelineConfig",
    "PipelineReport",
    "RunPipelineUseCase",
    "SomSchedule",
    "SomState",
    "TriangularMf",
    "active_pair",
    "eval_triangle",
    "lms_step",
    "nfn_eval",
    "rebuild_partition",
    "run_pipeline",
    "som_init",
    "som_train",
    "train_weights",
    "uniform_partition",
    "winner",
]
