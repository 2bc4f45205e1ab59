"""Configuration for the MLP baseline module."""

from pydantic import BaseModel, ConfigDict, Field

from nfnmk.modules.common import TrainConfig


class MlpConfig(BaseModel):
    """Defaults of the 2-7-1 backprop baseline, registered under the `mlp` section."""

    model_name: str = Field(default="NN", min_length=1, description="Name in comparisons")
    init_seed: int = Field(default=0, description="Seed of the uniform weight initialisation")
    init_range: float = Field(default=0.5, gt=0.0, description="Weights start in (-r, r)")
    train: TrainConfig = Field(default_factory=TrainConfig)


class MlpExperimentConfig(MlpConfig):
    """One baseline training run."""

    model_config = ConfigDict(extra="forbid")

    dataset: str | None = Field(default=None, description="Path of the training dataset CSV")

    @classmethod
    def from_defaults(
        cls, defaults: MlpConfig, overrides: dict[str, object]
    ) -> "MlpExperimentConfig":
        """実験ファイルの値を既定設定に重ねる (入れ子のブロックはマージ、未知のキーは拒否)"""
        merged = defaults.model_dump()
        for key, value in overrides.items():
            if isinstance(value, dict) and isinstance(merged.get(key), dict):
                merged[key] = {**merged[key], **value}
            else:
                merged[key] = value
        return cls.model_validate(merged)
