"""usecases.py のテスト"""

from pathlib import Path

import pytest
from pytest_mock import MockerFixture

from nfnmk.modules.bench.config import BenchConfig
from nfnmk.modules.bench.usecases import (
    CompareModelsUseCase,
    GenerateDatasetUseCase,
    LoadDatasetUseCase,
    WritePredictionsUseCase,
)
from nfnmk.modules.common import Dataset

from tests.factories import ModelSummaryFactory


@pytest.mark.unit
class TestGenerateDatasetUseCase:
    """GenerateDatasetUseCase のテスト"""

    def test_config_defaults(self, mocker: MockerFixture) -> None:
        repository = mocker.MagicMock()
        data = GenerateDatasetUseCase(BenchConfig(), repository).execute()
        assert len(data) == 225
        repository.save.assert_not_called()

    def test_arguments_override_config(self, tmp_path: Path, mocker: MockerFixture) -> None:
        repository = mocker.MagicMock()
        out = tmp_path / "grid.csv"

        data = GenerateDatasetUseCase(BenchConfig(), repository).execute(3, (0.0, 1.0), out)

        assert [s.x1 for s in data] == [0.0] * 3 + [0.5] * 3 + [1.0] * 3
        repository.save.assert_called_once_with(data, out)

    def test_invalid_domain_in_config(self) -> None:
        with pytest.raises(ValueError):
            BenchConfig(domain=(1.0, -1.0))


@pytest.mark.unit
class TestDatasetIoUseCases:
    """LoadDatasetUseCase / WritePredictionsUseCase のテスト"""

    def test_load_delegates(self, small_grid: Dataset, mocker: MockerFixture) -> None:
        repository = mocker.MagicMock()
        repository.load.return_value = small_grid
        assert LoadDatasetUseCase(repository).execute(Path("grid.csv")) is small_grid

    def test_write_predictions_returns_rows(
        self, small_grid: Dataset, mocker: MockerFixture
    ) -> None:
        writer = mocker.MagicMock()
        writer.write.return_value = 25
        rows = WritePredictionsUseCase(writer).execute(small_grid, [0.0] * 25, Path("p.csv"))
        assert rows == 25


@pytest.mark.unit
class TestCompareModelsUseCase:
    """CompareModelsUseCase のテスト"""

    def test_reads_every_report(self, mocker: MockerFixture) -> None:
        reader = mocker.MagicMock()
        reader.load_summary.side_effect = [
            ModelSummaryFactory.build(),
            ModelSummaryFactory.build(model="NN", mqe=0.09),
        ]
        writer = mocker.MagicMock()

        comparison = CompareModelsUseCase(BenchConfig(), reader, writer).execute(
            [Path("a.json"), Path("b.json")]
        )

        assert [r.model for r in comparison.rows] == ["NFN-MK", "NN", "NFHQ", "FSOM"]
        writer.write.assert_not_called()

    def test_writes_csv_when_requested(self, mocker: MockerFixture) -> None:
        reader = mocker.MagicMock()
        reader.load_summary.return_value = ModelSummaryFactory.build()
        writer = mocker.MagicMock()

        comparison = CompareModelsUseCase(
            BenchConfig(include_published=True), reader, writer
        ).execute([Path("a.json")], Path("cmp.csv"))

        assert len(comparison.rows) == 5
        writer.write.assert_called_once_with(comparison, Path("cmp.csv"))
