"""Benchmark module.

Mexican-hat target and grid datasets, the MQE metric, arithmetic-operation accounting and the
comparison table against the published reference models.
"""

from .config import BenchConfig
from .domain import (
    PUBLISHED_ROWS,
    REFERENCE_ROWS,
    Comparison,
    ComparisonRow,
    ComparisonWriter,
    DatasetRepository,
    EmptyComparisonError,
    InvalidGridError,
    PredictionWriter,
    ReportReader,
    compare_models,
    count_eval_ops,
    gen_grid,
    mexican_hat,
    sinc,
)
from .infrastructure import (
    CsvComparisonWriter,
    CsvDatasetRepository,
    CsvPredictionWriter,
    JsonReportReader,
    comparison_csv,
)
from .usecases import (
    CompareModelsUseCase,
    GenerateDatasetUseCase,
    LoadDatasetUseCase,
    WritePredictionsUseCase,
)

__all__ = [
    "PUBLISHED_ROWS",
    "REFERENCE_ROWS",
    "BenchConfig",
    "CompareModelsUseCase",
    "Comparison",
    "ComparisonRow",
    "ComparisonWriter",
    "CsvComparisonWriter",
    "CsvDatasetRepository",
    "CsvPredictionWriter",
    "DatasetRepository",
    "EmptyComparisonError",
    "GenerateDatasetUseCase",
    "InvalidGridError",
    "JsonReportReader",
    "LoadDatasetUseCase",
    "PredictionWriter",
    "ReportReader",
    "WritePredictionsUseCase",
    "compare_models",
    "comparison_csv",
    "count_eval_ops",
    "gen_grid",
    "mexican_hat",
    "sinc",
]
