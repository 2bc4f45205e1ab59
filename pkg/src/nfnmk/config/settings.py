"""
Configuration module for managing application settings.

This module provides classes and methods to handle application configuration,
including reading TOML settings files and environment variables.
"""

import logging
import os
from collections.abc import Callable
from os.path import expanduser
from pathlib import Path
from typing import Any

import tomli
from injector import Binder
from pydantic import BaseModel, Field
from pydantic.v1.utils import deep_update

from nfnmk.modules.bench.config import BenchConfig
from nfnmk.modules.common import CommonConfig
from nfnmk.modules.mlp.config import MlpConfig
from nfnmk.modules.nfn.config import NfnConfig

logger = logging.getLogger(__name__)

ENV_PREFIX = "NFNMK_"
PACKAGED_SETTINGS = str(Path(__file__).parent / "settings.toml")
USER_SETTINGS = expanduser("~/.config/nfnmk/settings.toml")
CONFIG_PATHS = [
    PACKAGED_SETTINGS,
    "/etc/nfnmk/settings.toml",
    USER_SETTINGS,
]


class ConfigRepository(BaseModel):
    """
    Configuration repository for the application.

    Holds one section per module. Later sources override earlier ones: settings files in
    CONFIG_PATHS order, then NFNMK_ environment variables, then explicit options.
    """

    common: CommonConfig = Field(default_factory=CommonConfig)  # Logging and directories
    nfn: NfnConfig = Field(default_factory=NfnConfig)  # NFN-MK training defaults
    mlp: MlpConfig = Field(default_factory=MlpConfig)  # MLP baseline defaults
    bench: BenchConfig = Field(default_factory=BenchConfig)  # Grid and comparison defaults

    @classmethod
    def create(
        cls, options: dict[str, Any] | None = None, paths: list[str] = CONFIG_PATHS
    ) -> "ConfigRepository":
        """Factory method to create an instance with every configuration source merged."""
        if options is None:
            options = {}

        etc_options = load_config_files(paths=paths)
        env_options = load_env_vars()
        fixed_options = deep_update(etc_options, env_options)
        fixed_options = deep_update(fixed_options, options)

        return cls(**fixed_options)

    def create_injector_builder(self) -> Callable[[Binder], None]:
        """
        Create an injector builder for dependency injection.

        Returns:
            Callable[[Binder], None]: Function to configure the injector.
        """

        def configure(binder: Binder) -> None:
            binder.bind(ConfigRepository, to=self)
            binder.bind(CommonConfig, to=self.common)
            binder.bind(NfnConfig, to=self.nfn)
            binder.bind(MlpConfig, to=self.mlp)
            binder.bind(BenchConfig, to=self.bench)

        return configure


def load_config_files(paths: list[str]) -> dict[str, Any]:
    """
    Load configuration from TOML files; later files override earlier ones key by key.

    Returns:
        dict[str, Any]: Merged configuration data from all found files.
    """
    config_data: dict[str, Any] = {}
    for path in (Path(p) for p in paths):
        if path.exists():
            try:
                with open(path, "rb") as f:
                    data: dict[str, Any] = tomli.load(f) or {}
                    config_data = deep_update(config_data, data)
            except Exception as e:
                logger.warning(f"Failed to load configuration file {path}: {e}")

    return config_data


def load_env_vars() -> dict[str, Any]:
    """
    Load environment variables with NFNMK_ prefix.

    Double underscores nest:
    - NFNMK_BENCH__N_PER_AXIS=21 -> bench.n_per_axis
    - NFNMK_NFN__TRAIN__EPOCHS=20 -> nfn.train.epochs

    Returns:
        dict[str, Any]: Configuration data from environment variables.
    """
    config_data: dict[str, Any] = {}

    for key, value in os.environ.items():
        if not key.startswith(ENV_PREFIX):
            continue

        setting_key = key[len(ENV_PREFIX) :].lower()
        parts = setting_key.split("__")

        current_dict = config_data
        for part in parts[:-1]:
            current_dict = current_dict.setdefault(part, {})
        current_dict[parts[-1]] = value

    return config_data
