"""Dependency injection container configuration."""

from injector import Binder, Injector, singleton

from nfnmk.config.settings import ConfigRepository
from nfnmk.modules.bench.domain import (
    ComparisonWriter,
    DatasetRepository,
    PredictionWriter,
    ReportReader,
)
from nfnmk.modules.bench.infrastructure import (
    CsvComparisonWriter,
    CsvDatasetRepository,
    CsvPredictionWriter,
    JsonReportReader,
)
from nfnmk.modules.mlp.domain import MlpModelRepository
from nfnmk.modules.mlp.infrastructure import JsonMlpModelRepository
from nfnmk.modules.nfn.domain import NfnModelRepository, PartitionExporter
from nfnmk.modules.nfn.infrastructure import CsvPartitionExporter, JsonNfnModelRepository


def configure(binder: Binder) -> None:
    """Configure the dependency injection container."""
    # NFN module bindings
    binder.bind(NfnModelRepository, to=JsonNfnModelRepository, scope=singleton)  # type: ignore[type-abstract]
    binder.bind(PartitionExporter, to=CsvPartitionExporter)  # type: ignore[type-abstract]

    # MLP module bindings
    binder.bind(MlpModelRepository, to=JsonMlpModelRepository, scope=singleton)  # type: ignore[type-abstract]

    # Bench module bindings
    binder.bind(DatasetRepository, to=CsvDatasetRepository)  # type: ignore[type-abstract]
    binder.bind(PredictionWriter, to=CsvPredictionWriter)  # type: ignore[type-abstract]
    binder.bind(ReportReader, to=JsonReportReader)  # type: ignore[type-abstract]
    binder.bind(ComparisonWriter, to=CsvComparisonWriter)  # type: ignore[type-abstract]


def create_injector(config: ConfigRepository) -> Injector:
    """
    Create and configure the dependency injection container.

    Returns:
        Injector: Configured injector instance.
    """
    return Injector([config.create_injector_builder(), configure])

