"""eval / export コマンドのテスト"""

import csv
import json
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from nfnmk.cli.cli import cli
from nfnmk.cli.evaluate import model_kind
from nfnmk.modules.common import DataFormatError, Dataset
from nfnmk.modules.mlp.domain import mlp_init
from nfnmk.modules.mlp.infrastructure import JsonMlpModelRepository
from nfnmk.modules.nfn.infrastructure import JsonNfnModelRepository
from nfnmk.modules.nfn.neuron import NfnModel


@pytest.fixture
def grid_csv(cli_runner: CliRunner, tmp_path: Path) -> Path:
    path = tmp_path / "grid.csv"
    result = cli_runner.invoke(cli, ["gen-data", "--n", "5", "--out", str(path)])
    assert result.exit_code == 0, result.output
    return path


@pytest.mark.unit
class TestModelKind:
    """model_kind のテスト"""

    def test_reads_discriminator(self, tmp_path: Path, uniform_model: NfnModel) -> None:
        JsonNfnModelRepository().save(uniform_model, tmp_path / "m.json")
        assert model_kind(tmp_path / "m.json") == "nfn"

    def test_unknown(self, tmp_path: Path) -> None:
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"kind": "rbf"}))
        with pytest.raises(DataFormatError, match="unknown model kind"):
            model_kind(path)


@pytest.mark.unit
class TestEvalCommand:
    """eval のテストクラス"""

    def test_zero_model_mqe_is_mean_square(
        self,
        cli_runner: CliRunner,
        tmp_path: Path,
        grid_csv: Path,
        small_grid: Dataset,
        uniform_model: NfnModel,
    ) -> None:
        model = tmp_path / "zero.json"
        JsonNfnModelRepository().save(uniform_model, model)

        result = cli_runner.invoke(cli, ["eval", "--model", str(model), "--data", str(grid_csv)])

        assert result.exit_code == 0, result.output
        expected = float(np.mean(np.square(small_grid.targets)))
        assert result.stdout.strip() == f"MQE: {expected:.4f}"

    def test_matches_training_report(
        self, cli_runner: CliRunner, tmp_path: Path, grid_csv: Path
    ) -> None:
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"dataset": "grid.csv"}))
        trained = cli_runner.invoke(
            cli,
            ["train", "--config", str(cfg), "--epochs", "3", "--som-epochs", "5",
             "--model-out", str(tmp_path / "m.json")],
        )  # fmt: skip
        assert trained.exit_code == 0, trained.output

        result = cli_runner.invoke(
            cli, ["eval", "--model", str(tmp_path / "m.json"), "--data", str(grid_csv)]
        )

        assert result.exit_code == 0, result.output
        assert result.stdout.strip() == trained.stdout.strip().replace("Final MQE", "MQE")

    def test_mlp_model_with_predictions(
        self, cli_runner: CliRunner, tmp_path: Path, grid_csv: Path
    ) -> None:
        model = tmp_path / "nn.json"
        JsonMlpModelRepository().save(mlp_init(0), model)
        out = tmp_path / "pred.csv"

        result = cli_runner.invoke(
            cli, ["eval", "--model", str(model), "--data", str(grid_csv), "--out", str(out)]
        )

        assert result.exit_code == 0, result.output
        with open(out, newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["x1", "x2", "y_true", "y_pred"]
        assert len(rows) == 26
        assert all(r[3] for r in rows[1:])

    def test_out_of_domain_rows_reported(
        self, cli_runner: CliRunner, tmp_path: Path, uniform_model: NfnModel
    ) -> None:
        model = tmp_path / "zero.json"
        JsonNfnModelRepository().save(uniform_model, model)
        data = tmp_path / "wide.csv"
        data.write_text("x1,x2,y\n0.0,0.0,1.0\n20.0,0.0,0.0\n")
        out = tmp_path / "pred.csv"

        result = cli_runner.invoke(
            cli, ["eval", "--model", str(model), "--data", str(data), "--out", str(out)]
        )

        assert result.exit_code == 1
        assert "row 2:" in result.stderr
        assert "1 of 2 rows could not be evaluated" in result.stderr
        assert result.stdout.strip() == "MQE: 1.0000"
        assert out.read_text().splitlines()[2].endswith(",")

    def test_truncated_dataset(
        self, cli_runner: CliRunner, tmp_path: Path, uniform_model: NfnModel
    ) -> None:
        model = tmp_path / "zero.json"
        JsonNfnModelRepository().save(uniform_model, model)
        data = tmp_path / "bad.csv"
        data.write_text("x1,x2,y\n0.0,0.0\n")

        result = cli_runner.invoke(cli, ["eval", "--model", str(model), "--data", str(data)])

        assert result.exit_code == 1
        assert "line 2" in result.stderr


@pytest.mark.unit
class TestExportCommand:
    """export のテストクラス"""

    def test_writes_fourteen_curves(
        self, cli_runner: CliRunner, tmp_path: Path, uniform_model: NfnModel
    ) -> None:
        model = tmp_path / "m.json"
        JsonNfnModelRepository().save(uniform_model, model)
        out = tmp_path / "curves.csv"

        result = cli_runner.invoke(
            cli, ["export", "--model", str(model), "--partitions-out", str(out)]
        )

        assert result.exit_code == 0, result.output
        assert result.stdout.strip() == f"14 curves written to {out}"

    def test_mlp_model_rejected(self, cli_runner: CliRunner, tmp_path: Path) -> None:
        model = tmp_path / "nn.json"
        JsonMlpModelRepository().save(mlp_init(0), model)

        result = cli_runner.invoke(
            cli, ["export", "--model", str(model), "--partitions-out", str(tmp_path / "c.csv")]
        )

        assert result.exit_code == 1
        assert "needs a neuro-fuzzy model" in result.stderr
