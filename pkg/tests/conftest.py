"""共通のテスト設定とfixture."""

from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner
from injector import Injector

from nfnmk.config.settings import ConfigRepository
from nfnmk.dependencies.container import create_injector
from nfnmk.modules.bench.domain import gen_grid
from nfnmk.modules.common import Dataset
from nfnmk.modules.nfn.membership import uniform_partition
from nfnmk.modules.nfn.neuron import NfnModel

DOMAIN = (-10.0, 10.0)


@pytest.fixture(autouse=True)
def isolated_user_data(
    monkeypatch: pytest.MonkeyPatch, tmp_path_factory: pytest.TempPathFactory
) -> Path:
    """ログファイルをテスト用ディレクトリに書き出す."""
    user_data = tmp_path_factory.mktemp("user_data")
    monkeypatch.setenv("NFNMK_COMMON__USER_DATA_DIR", str(user_data))
    return user_data


@pytest.fixture(scope="session")
def mexican_grid() -> Dataset:
    """15×15 のメキシカンハット格子 (225 サンプル)."""
    return gen_grid(15, DOMAIN)


@pytest.fixture
def small_grid() -> Dataset:
    """5×5 の小さな格子."""
    return gen_grid(5, DOMAIN)


@pytest.fixture
def uniform_model() -> NfnModel:
    """一様分割・重みゼロの 2 入力モデル."""
    return NfnModel.zeros([uniform_partition(*DOMAIN), uniform_partition(*DOMAIN)])


@pytest.fixture
def random_nfn_model() -> Callable[[int], NfnModel]:
    """一様分割・乱数重みの 2 入力モデルを作るヘルパー."""

    def _create(seed: int) -> NfnModel:
        rng = np.random.default_rng(seed)
        partitions = [uniform_partition(*DOMAIN), uniform_partition(*DOMAIN)]
        return NfnModel(tuple(partitions), rng.uniform(-1.0, 1.0, (2, 7)))

    return _create


@pytest.fixture
def cli_runner() -> CliRunner:
    """CLI テスト用ランナー."""
    return CliRunner()


@pytest.fixture(scope="function")
def injector(tmp_path_factory: pytest.TempPathFactory) -> Injector:
    config = ConfigRepository()
    config.common.user_data_dir = str(tmp_path_factory.mktemp("user_data"))

    return create_injector(config)

